#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "centext/coset.hpp"
#include "centext/word.hpp"

namespace centext {

// Finite group as a full multiplication table. Elements are 0..order-1.
class GroupTable {
 public:
  using Element = std::uint32_t;

  // mul is order x order, row-major, mul[a * order + b] = a*b. Throws
  // PreconditionError if the table has no two-sided identity or an element
  // lacks an inverse. words[i], when given, is a word over gens for element i.
  GroupTable(std::size_t order, std::vector<Element> mul, std::vector<Generator> gens = {},
             std::vector<Element> generator_images = {}, std::vector<Word> words = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element pow(Element a, const BigInt& k) const;
  Element conjugate(Element g, Element by) const { return mul(mul(inverse(by), g), by); }

  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<Element>& generator_images() const { return images_; }
  // Image of a presentation generator; throws AlphabetError if absent.
  Element image(Generator g) const;
  // Value of w under the generator images.
  Element evaluate(const Word& w) const;
  // A word over the generators for each element (empty when unknown).
  const std::vector<Word>& words() const { return words_; }

 private:
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::vector<Generator> gens_;
  std::vector<Element> images_;
  std::vector<Word> words_;
};

// Regular representation of the group presented by a closed coset table of
// the trivial subgroup. Element i is coset i; generator images are the cosets
// of the generators. Throws PreconditionError if the action is not regular.
GroupTable realize(const CosetTable& table);

bool is_latin_square(const GroupTable& g);
// Every triple for order <= 200, otherwise `samples` seeded random triples.
bool is_associative(const GroupTable& g, std::uint64_t seed = 1, std::size_t samples = 20000);

std::uint64_t element_order(const GroupTable& g, GroupTable::Element x);
// lcm of element orders.
std::uint64_t exponent(const GroupTable& g);

// Sorted element list of the subgroup generated by gens.
std::vector<GroupTable::Element> subgroup_closure(const GroupTable& g,
                                                  const std::vector<GroupTable::Element>& gens);

// Generator images if they generate g, otherwise a greedy generating set
// (each element in order that is not already generated).
std::vector<GroupTable::Element> generating_set(const GroupTable& g);

}  // namespace centext
