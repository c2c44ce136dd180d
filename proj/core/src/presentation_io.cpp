#include <charconv>
#include <sstream>

#include "centext/errors.hpp"
#include "centext/presentation.hpp"

namespace centext {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineno;
    f(text.substr(pos, nl - pos), lineno);
    pos = nl + 1;
  }
}

int parse_count(const std::string& s, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
    throw ParseError("expected a nonnegative integer, got '" + s + "'", line);
  return v;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::vector<std::pair<Word, std::size_t>> pending;
  for_each_line(text, [&](std::string_view raw, std::size_t line) {
    std::string content(raw);
    if (content.rfind("#@", 0) == 0) {
      auto eq = content.find('=');
      if (eq == std::string::npos) throw ParseError("metadata line without '='", line);
      p.metadata.emplace_back(trim(content.substr(2, eq - 2)), trim(content.substr(eq + 1)));
      return;
    }
    if (auto hash = content.find('#'); hash != std::string::npos) content.resize(hash);
    content = trim(content);
    if (content.empty()) return;

    std::istringstream in(content);
    std::string keyword;
    in >> keyword;
    std::string rest;
    std::getline(in, rest);
    rest = trim(rest);
    if (keyword == "gens") {
      if (have_gens) throw ParseError("duplicate 'gens' line", line);
      p.rank = parse_count(rest, line);
      have_gens = true;
    } else if (keyword == "cgens") {
      std::istringstream names(rest);
      std::string name;
      while (names >> name) {
        Generator g;
        try {
          g = parse_generator(name);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line);
        }
        if (g.kind != GenKind::central)
          throw ParseError("'" + name + "' is not a central generator name (expected d<k>)", line);
        if (p.declares(g)) throw ParseError("central generator '" + name + "' declared twice", line);
        p.central_gens.push_back(g.index);
      }
    } else if (keyword == "rel") {
      try {
        pending.emplace_back(parse_word(rest), line);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line);
    }
  });
  if (!have_gens) throw ParseError("missing 'gens' line");
  for (auto& [w, line] : pending) {
    for (const auto& s : w.syllables())
      if (!p.declares(s.gen))
        throw AlphabetError("line " + std::to_string(line) + ": undeclared generator " + generator_name(s.gen));
    p.add_relator(w);
  }
  return p;
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "# centext presentation\n";
  for (const auto& [k, v] : p.metadata) out << "#@ " << k << " = " << v << '\n';
  out << "gens " << p.rank << '\n';
  if (!p.central_gens.empty()) {
    out << "cgens";
    for (int c : p.central_gens) out << ' ' << generator_name(central(c));
    out << '\n';
  }
  for (const auto& r : p.relators) out << "rel " << to_string(r) << '\n';
  return out.str();
}

Assignment parse_assignment(std::string_view text, std::size_t count) {
  std::vector<std::optional<Word>> images(count);
  for_each_line(text, [&](std::string_view raw, std::size_t line) {
    std::string content(raw);
    if (auto hash = content.find('#'); hash != std::string::npos) content.resize(hash);
    content = trim(content);
    if (content.empty()) return;
    std::istringstream in(content);
    std::string keyword, index, arrow;
    in >> keyword >> index >> arrow;
    if (keyword != "period" || arrow != "->")
      throw ParseError("expected 'period <index> -> <word>'", line);
    const int j = parse_count(index, line);
    if (j < 1 || static_cast<std::size_t>(j) > count)
      throw ParseError("period index " + index + " outside 1.." + std::to_string(count), line);
    if (images[static_cast<std::size_t>(j - 1)]) throw ParseError("period " + index + " assigned twice", line);
    std::string rest;
    std::getline(in, rest);
    Word w;
    try {
      w = parse_word(rest);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
    if (!w.uses_only(GenKind::central))
      throw ParseError("assignment images must be words over central generators", line);
    images[static_cast<std::size_t>(j - 1)] = std::move(w);
  });
  Assignment a;
  for (std::size_t j = 0; j < count; ++j) {
    if (!images[j]) throw ParseError("period " + std::to_string(j + 1) + " has no assignment");
    a.images.push_back(std::move(*images[j]));
  }
  return a;
}

std::string serialize_assignment(const Assignment& sigma) {
  std::ostringstream out;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    out << "period " << j + 1 << " -> " << to_string(sigma.images[j]) << '\n';
  return out.str();
}

}  // namespace centext
