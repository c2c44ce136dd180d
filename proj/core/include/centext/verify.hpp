#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/group_table.hpp"
#include "centext/homology.hpp"
#include "centext/presentation.hpp"

namespace centext {

using ElementSet = std::vector<GroupTable::Element>;

ElementSet center(const GroupTable& g);
// Subgroup generated by all n-th powers.
ElementSet verbal_nth_power_subgroup(const GroupTable& g, int n);

// First pair (x, y) in table order with [x^n, y] != 1, or nullopt.
std::optional<std::pair<GroupTable::Element, GroupTable::Element>> check_identity_xn_y(const GroupTable& g,
                                                                                      int n);

struct IsoFingerprint {
  std::size_t order = 0;
  std::uint64_t exponent = 0;
  std::string abelianization;
  std::size_t center_order = 0;
  std::vector<std::uint64_t> element_orders;  // sorted
  std::vector<std::size_t> class_sizes;       // sorted

  friend bool operator==(const IsoFingerprint&, const IsoFingerprint&) = default;
  std::string to_string() const;
};

IsoFingerprint iso_fingerprint(const GroupTable& g);
std::vector<ElementSet> conjugacy_classes(const GroupTable& g);

inline constexpr std::size_t max_brute_order = 128;

// Explicit isomorphism g -> h (as an image per element), or nullopt. Throws
// SizeLimitError above max_brute_order.
std::optional<std::vector<GroupTable::Element>> find_isomorphism(const GroupTable& g, const GroupTable& h);
bool brute_isomorphic(const GroupTable& g, const GroupTable& h);

// Group of cosets of the normal subgroup k; coset 0 is k itself. Generator
// images and element words carry over. Throws PreconditionError unless k is
// a normal subgroup.
GroupTable quotient_by_normal(const GroupTable& g, const ElementSet& k);
// Same, additionally requiring k to be central.
GroupTable quotient_by_central(const GroupTable& g, const ElementSet& k);
// Coset index of each element of g modulo k, as used by quotient_by_normal.
std::vector<std::uint32_t> coset_labels(const GroupTable& g, const ElementSet& k);

struct TransversalReport {
  std::size_t subgroups = 0;
  std::size_t disjoint = 0;  // subgroups H with H cap D = 1
  bool all_inject = true;
};

// Subgroups generated by at most two elements plus the derived subgroup and
// the center; each one meeting d_image trivially must inject into G/d_image.
TransversalReport subgroup_transversal_check(const GroupTable& g, const ElementSet& d_image);

// Images sigma(j) = psi(class(P_j^n)) over the periods of length <= max_length.
Assignment suggest_assignment(const RelationModule& rm, const AbelianPresentation& d, const AbelianHom& psi,
                              int max_length);

struct Consistency {
  bool consistent = false;
  // The induced psi: V -> D when consistent and the period classes generate
  // V; the zero map for an empty schema.
  std::optional<AbelianHom> psi;
  // Otherwise sum_j lambda_j class(P_j^n) = 0 in V while sum_j lambda_j sigma(j)
  // is the nonzero element `residue` of D.
  std::vector<BigInt> lambda;
  std::optional<AbelianElement> residue;
};

// Does sigma factor as psi o class for a homomorphism psi: V -> D?
Consistency assignment_consistency(const Assignment& sigma, const RelationModule& rm, const AbelianPresentation& d,
                                   int max_length);

enum class ItemStatus { pass, fail, reported };

struct ItemResult {
  ItemStatus status = ItemStatus::fail;
  std::string detail;
};

struct Theorem1Report {
  int m = 0;
  int n = 0;
  int max_length = 0;
  std::size_t group_order = 0;
  std::optional<std::pair<GroupTable::Element, GroupTable::Element>> identity_witness;
  ElementSet verbal;
  ElementSet verbal_expected;  // closure of sigma-images and D^n
  ElementSet d_image;
  ElementSet center;
  std::size_t burnside_order = 0;
  std::size_t burnside_center_order = 0;
  std::optional<BigInt> d_order;  // nullopt when D is infinite
  bool consistent = false;
  bool fingerprints_match = false;
  std::optional<std::vector<GroupTable::Element>> isomorphism;
  ItemResult items[4];

  bool embeds() const;
  // Items 1-4 pass (reported items count as passing).
  bool all_pass() const;
  // `ITEM k: ...` lines followed by the EMBEDDING line.
  std::string to_string() const;
};

// Builds A_D(m, n, L) with D and sigma, enumerates and realizes it, and
// checks Theorem 1 items 1-4 against the B(m, n) truncation at the same L.
Theorem1Report verify_theorem1_suite(int m, int n, int max_length, const AbelianPresentation& d,
                                     const Assignment& sigma, std::size_t max_cosets = default_max_cosets);

}  // namespace centext
