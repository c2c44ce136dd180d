#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "centext/coset.hpp"
#include "centext/errors.hpp"
#include "centext/group_table.hpp"
#include "centext/homology.hpp"
#include "centext/presentation.hpp"
#include "centext/verify.hpp"

namespace centext::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A presentation file, or a structure string such as `Z x C_2`.
AbelianPresentation load_abelian(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return abelian_presentation(parse_presentation(read_file(spec)));
  return abelian_presentation(spec);
}

// `const:<word>` or an assignment file.
Assignment load_assignment(const std::string& spec, std::size_t periods) {
  if (spec.rfind("const:", 0) == 0) return constant_assignment(periods, parse_word(spec.substr(6)));
  return parse_assignment(read_file(spec), periods);
}

std::vector<BigInt> parse_integers(const std::string& text, char sep) {
  std::vector<BigInt> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    try {
      out.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

// zero | project:<k> | matrix:<r>,<c>,...;<r>,<c>,...
AbelianHom parse_psi(const std::string& spec, const FgAbelianGroup& v, const FgAbelianGroup& d) {
  IntMatrix m(d.dimension(), v.dimension());
  if (spec == "zero") {
  } else if (spec.rfind("project:", 0) == 0) {
    const auto k = parse_integers(spec.substr(8), ',');
    if (k.size() != 1 || k[0] < 1 || k[0] > static_cast<long>(v.dimension()))
      throw ParseError("project:<k> needs 1 <= k <= " + std::to_string(v.dimension()));
    if (d.dimension() == 0) throw PreconditionError("project: D is trivial");
    m(0, k[0].get_ui() - 1) = 1;
  } else if (spec.rfind("matrix:", 0) == 0) {
    std::stringstream rows(spec.substr(7));
    std::string row;
    std::size_t r = 0;
    while (std::getline(rows, row, ';')) {
      const auto entries = parse_integers(row, ',');
      if (r >= m.rows() || entries.size() != m.cols())
        throw DimensionError("psi matrix must be " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
      for (std::size_t c = 0; c < entries.size(); ++c) m(r, c) = entries[c];
      ++r;
    }
    if (r != m.rows())
      throw DimensionError("psi matrix must be " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
  } else {
    throw ParseError("--auto-psi expects zero, project:<k> or matrix:<rows>");
  }
  return hom_check(m, v, d);
}

std::string element_list(const GroupTable& g, const ElementSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += i ? ", " : "";
    out += g.words().empty() ? std::to_string(s[i]) : to_string(g.words()[s[i]]);
  }
  return out;
}

struct Options {
  std::string builder;
  int m = 2;
  int n = 2;
  int L = 2;
  int l_min = 1;
  int l_max = 6;
  int imax = 0;
  std::string abelian;
  std::string assign;
  std::string auto_psi;
  std::string input;
  std::string output;
  std::size_t max_cosets = default_max_cosets;
  bool eliminate = false;
  bool want_center = false;
  bool want_exponent = false;
  bool want_fingerprint = false;
  int verbal = 0;
  int identity = 0;
  std::string word;
};

const std::vector<std::string> builders = {"burnside", "a-d", "a-c", "a-classic", "a-prime", "a-q"};

Presentation build(const Options& o, int L) {
  if (o.builder == "burnside") return build_burnside(o.m, o.n, L);
  if (o.builder == "a-c") return build_a_c(o.m, o.n, L);
  if (o.builder == "a-classic") return build_a_classic(o.m, o.n, L);
  if (o.builder == "a-prime") return build_a_prime(o.m, o.n, L);
  if (o.builder == "a-q") {
    const int imax = o.imax > 0 ? o.imax : static_cast<int>(enumerate_periods(o.m, L).size());
    return build_a_q(o.m, o.n, L, std::max(imax, 1));
  }
  if (o.builder == "a-d") {
    if (o.abelian.empty()) throw PreconditionError("a-d needs --abelian");
    const auto d = load_abelian(o.abelian);
    const auto periods = enumerate_periods(o.m, L).size();
    return build_a_d(o.m, o.n, L, d, o.assign.empty() ? bijective_assignment(periods) : load_assignment(o.assign, periods));
  }
  throw PreconditionError("unknown builder '" + o.builder + "'");
}

Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

int cmd_present(const Options& o, std::ostream& out) {
  auto p = build(o, o.L);
  if (o.eliminate) p = eliminate_central_generators(p);
  const auto text = serialize(p);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + o.output + "'");
    f << text;
  }
  return ok;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto t = todd_coxeter(load_presentation(o.input), {}, o.max_cosets);
  out << "order " << t.size() << '\n';
  return ok;
}

int cmd_stabilize(const Options& o, std::ostream& out) {
  const auto s = stabilized_order([&](int L) { return build(o, L); }, o.l_max, o.max_cosets, o.l_min);
  out << "order " << s.order << " (stabilized at L=" << s.stable_length << ")\n";
  if (o.builder == "burnside") {
    // A truncation of exponent dividing n is a quotient of B(m,n) and maps onto it.
    const auto g = realize(todd_coxeter(build(o, s.stable_length), {}, o.max_cosets));
    const auto e = exponent(g);
    if (o.n % e == 0)
      out << "certified: exponent " << e << " divides n=" << o.n << ", so the order is |B(" << o.m << "," << o.n << ")|\n";
    else
      out << "stabilized at L=" << s.stable_length << ", not certified (exponent " << e << ")\n";
  } else {
    out << "stabilized at L=" << s.stable_length << ", not certified\n";
  }
  return ok;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto g = realize(todd_coxeter(load_presentation(o.input), {}, o.max_cosets));
  int code = ok;
  out << "order " << g.order() << '\n';
  if (o.want_exponent) out << "exponent " << exponent(g) << '\n';
  if (o.want_center) {
    const auto z = center(g);
    out << "center order " << z.size() << ": {" << element_list(g, z) << "}\n";
  }
  if (o.verbal > 0) {
    const auto v = verbal_nth_power_subgroup(g, o.verbal);
    out << "verbal x^" << o.verbal << " subgroup order " << v.size() << (v.size() == g.order() ? " (whole group)" : "")
        << ": {" << element_list(g, v) << "}\n";
  }
  if (o.identity > 0) {
    if (auto w = check_identity_xn_y(g, o.identity)) {
      out << "identity [x^" << o.identity << ",y]=1: false, witness x=" << element_list(g, {w->first})
          << ", y=" << element_list(g, {w->second}) << '\n';
      code = property_failure;
    } else {
      out << "identity [x^" << o.identity << ",y]=1: true\n";
    }
  }
  if (o.want_fingerprint) out << "fingerprint " << iso_fingerprint(g).to_string() << '\n';
  return code;
}

int cmd_schur(const Options& o, std::ostream& out) {
  const auto rm = relation_module(o.m, o.n, o.l_max, o.max_cosets);
  const auto M = schur_multiplier(rm);
  out << "V(" << o.m << "," << o.n << ") = " << rm.V().to_string() << '\n';
  out << "M(" << o.m << "," << o.n << ") = " << M.to_string() << '\n';
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.assign.empty() && !o.auto_psi.empty()) throw PreconditionError("use either --assign or --auto-psi");
  const auto d = load_abelian(o.abelian);
  const auto periods = enumerate_periods(o.m, o.L).size();
  Assignment sigma;
  if (!o.auto_psi.empty()) {
    const auto rm = relation_module(schreier_system(o.m, o.n, o.L, o.max_cosets), o.n);
    sigma = suggest_assignment(rm, d, parse_psi(o.auto_psi, rm.V(), d.group()), o.L);
  } else if (!o.assign.empty()) {
    sigma = load_assignment(o.assign, periods);
  } else {
    sigma = bijective_assignment(periods);
  }
  const auto report = verify_theorem1_suite(o.m, o.n, o.L, d, sigma, o.max_cosets);
  out << report.to_string();
  return report.all_pass() ? ok : property_failure;
}

int cmd_q_normal(const Options& o, std::ostream& out) {
  const auto w = parse_word(o.word);
  const auto q = q_word_to_rational(w);
  out << q.to_string() << "  =  " << to_string(q_rational_to_word(q)) << '\n';
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"centext: central extensions of free Burnside groups"};
  app.require_subcommand(1);
  Options o;

  auto add_mn = [&](CLI::App* c) {
    c->add_option("-m", o.m, "rank")->check(CLI::PositiveNumber);
    c->add_option("-n", o.n, "exponent")->check(CLI::Range(2, 1 << 20));
  };
  auto add_limit = [&](CLI::App* c) {
    c->add_option("--max-cosets", o.max_cosets, "coset table limit")->check(CLI::PositiveNumber);
  };

  auto* present = app.add_subcommand("present", "print a presentation");
  present->add_option("builder", o.builder, "builder")->required()->check(CLI::IsMember(builders));
  add_mn(present);
  present->add_option("-L", o.L, "period length bound")->check(CLI::NonNegativeNumber);
  present->add_option("--abelian", o.abelian, "D as `Z^r x C_a ...` or a presentation file");
  present->add_option("--assign", o.assign, "assignment file or const:<word>");
  present->add_option("--imax", o.imax, "number of Q generators");
  present->add_flag("--eliminate", o.eliminate, "Tietze-eliminate central generators");
  present->add_option("-o", o.output, "output file");

  auto* enumerate = app.add_subcommand("enumerate", "coset-enumerate a presentation file");
  enumerate->add_option("file", o.input)->required()->check(CLI::ExistingFile);
  add_limit(enumerate);

  auto* stabilize = app.add_subcommand("stabilize", "order of truncations until two consecutive L agree");
  stabilize->add_option("builder,--builder", o.builder, "builder")->check(CLI::IsMember(builders));
  add_mn(stabilize);
  stabilize->add_option("--Lmax", o.l_max, "largest L")->check(CLI::NonNegativeNumber);
  stabilize->add_option("--Lmin", o.l_min, "smallest L")->check(CLI::NonNegativeNumber);
  stabilize->add_option("--abelian", o.abelian, "D for a-d");
  stabilize->add_option("--assign", o.assign, "const:<word> for a-d");
  stabilize->add_option("--imax", o.imax, "number of Q generators");
  add_limit(stabilize);

  auto* analyze = app.add_subcommand("analyze", "structure of a finite presented group");
  analyze->add_option("file", o.input)->required()->check(CLI::ExistingFile);
  analyze->add_flag("--center", o.want_center);
  analyze->add_option("--verbal", o.verbal, "verbal subgroup of n-th powers")->check(CLI::PositiveNumber);
  analyze->add_flag("--exponent", o.want_exponent);
  analyze->add_flag("--fingerprint", o.want_fingerprint);
  analyze->add_option("--identity", o.identity, "check [x^n,y]=1")->check(CLI::PositiveNumber);
  add_limit(analyze);

  auto* schur = app.add_subcommand("schur", "relation module and Schur multiplier of B(m,n)");
  add_mn(schur);
  schur->add_option("--Lmax", o.l_max, "largest L for stabilization");
  add_limit(schur);

  auto* verify = app.add_subcommand("verify-theorem1", "Theorem 1 suite on A_D(m,n)");
  add_mn(verify);
  verify->add_option("-L", o.L, "period length bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--abelian", o.abelian, "D")->required();
  verify->add_option("--assign", o.assign, "assignment file or const:<word>");
  verify->add_option("--auto-psi", o.auto_psi, "zero | project:<k> | matrix:<rows>");
  add_limit(verify);

  auto* qnormal = app.add_subcommand("q-normal", "value and normal form of a word in Q");
  qnormal->add_option("word", o.word)->required();

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*present) return cmd_present(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*stabilize) {
      if (o.builder.empty()) throw PreconditionError("stabilize needs a builder");
      return cmd_stabilize(o, out);
    }
    if (*analyze) return cmd_analyze(o, out);
    if (*schur) return cmd_schur(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*qnormal) return cmd_q_normal(o, out);
  } catch (const CosetOverflow& e) {
    out << "OVERFLOW\n";
    err << e.what() << '\n';
    return overflow;
  } catch (const SizeLimitError& e) {
    err << e.what() << '\n';
    return overflow;
  } catch (const UnstableOrder& e) {
    err << e.what() << '\n';
    return property_failure;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return property_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace centext::cli
