#ifndef PAMDT_MONOID_HPP
#define PAMDT_MONOID_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pamdt {

using ElemId = std::uint32_t;

// A finite multiset of elements, kept sorted ascending by id.
using Multiset = std::vector<ElemId>;

Multiset canonical_multiset(Multiset items);

struct MultisetHash {
  std::size_t operator()(const Multiset& m) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (ElemId e : m) {
      h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// One directed sum entry "lhs + rhs = value" from a description file or
// constructor; `line` is the source line when parsed from text (0 otherwise).
struct SumEntry {
  std::string lhs, rhs, value;
  int line = 0;
};

// Unvalidated description of a (possibly filtered) partial abelian monoid.
// levels.size() == 1 describes a plain monoid; more levels describe a
// filtration where level i contains all entries of levels <= i.
struct RawMonoid {
  std::vector<std::string> elements;
  std::string zero;
  std::vector<std::vector<SumEntry>> levels{1};
  bool filtered = false;
};

struct ComposableTuple {
  std::vector<ElemId> entries;
  bool certified = false;  // set by composable_tuples; every prefix checked
};

// A validated partial abelian monoid: finite carrier, distinguished zero and
// a partially defined commutative sum satisfying the unit law and
// associativity coherence (see validate_monoid).  Instances are immutable
// once built; the multiset-composability memo is shared between copies and
// guarded by a mutex.
class PartialMonoid {
 public:
  std::size_t size() const { return names_.size(); }
  ElemId zero() const { return zero_; }
  const std::string& name(ElemId e) const { return names_.at(e); }
  const std::vector<std::string>& element_names() const { return names_; }

  std::optional<ElemId> find(std::string_view name) const;
  ElemId require(std::string_view name) const;

  // Binary sum; nullopt when undefined.  Throws std::out_of_range when an
  // operand is outside the carrier.
  std::optional<ElemId> sum(ElemId a, ElemId b) const;
  bool defined(ElemId a, ElemId b) const { return sum(a, b).has_value(); }

  // A multiset is composable when some sequence of pairwise reductions
  // collapses it to a single element.  By coherence every reduction order
  // then succeeds with the same result, so the search can stop at the first
  // witness.  Empty multiset composes to zero.
  bool composable(const Multiset& items) const;

  // Total of a composable multiset; throws std::invalid_argument otherwise.
  ElemId multiset_sum(const Multiset& items) const;

  // All ordered k-tuples whose underlying multiset is composable, in
  // lexicographic order by element id.  k = 0 yields the empty tuple.
  std::vector<ComposableTuple> composable_tuples(int k) const;

  // Defined unordered pairs (a <= b) with their values, lexicographic.
  std::vector<std::pair<std::pair<ElemId, ElemId>, ElemId>> defined_pairs()
      const;

  std::string canonical_text() const;
  std::uint64_t hash() const;

 private:
  PartialMonoid() = default;
  friend struct MonoidBuilder;

  std::optional<ElemId> compose_value(const Multiset& sorted_items) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElemId> index_;
  ElemId zero_ = 0;
  // Dense symmetric table, size() * size(); -1 marks an undefined sum.
  std::vector<std::int32_t> table_;

  struct Memo {
    std::mutex mu;
    std::unordered_map<Multiset, std::optional<ElemId>, MultisetHash> map;
  };
  std::shared_ptr<Memo> memo_;
};

struct ValidationResult {
  std::vector<std::string> violations;
  std::optional<PartialMonoid> monoid;  // engaged iff violations is empty
  bool ok() const { return violations.empty(); }
};

// Checks a raw description against the axioms and reports every violation:
// carrier problems (duplicates, missing zero, unknown names), conflicting
// entries for a pair (covers asymmetric listings), unit-law failures, and
// associativity coherence failures, i.e. ordered triples (a, b, c) where
// b + c and a + (b + c) are defined but a + b or (a + b) + c is undefined
// or (a + b) + c != a + (b + c).  Sum entries may list either orientation
// of a pair; the symmetric closure is taken before checking.
ValidationResult validate_monoid(const RawMonoid& raw);

struct FilteredValidationResult;

// An increasing chain of partial monoids on a shared carrier: every sum
// defined at level i is defined with the same value at level i + 1.
class FilteredPartialMonoid {
 public:
  std::size_t level_count() const { return levels_.size(); }
  const PartialMonoid& level(std::size_t i) const { return levels_.at(i); }
  const PartialMonoid& top() const { return levels_.back(); }

  // Least level at which the multiset is composable, if any.
  std::optional<std::size_t> composable_level(const Multiset& items) const;

  std::string canonical_text() const;
  std::uint64_t hash() const;

 private:
  FilteredPartialMonoid() = default;
  friend struct MonoidBuilder;
  friend FilteredValidationResult validate_filtered_monoid(const RawMonoid&);
  friend FilteredPartialMonoid constant_filtration(const PartialMonoid&,
                                                   std::size_t);
  std::vector<PartialMonoid> levels_;
};

struct FilteredValidationResult {
  std::vector<std::string> violations;
  std::optional<FilteredPartialMonoid> monoid;
  bool ok() const { return violations.empty(); }
};

// Validates each level as a partial monoid.  Levels are cumulative by
// construction, so the subset property holds automatically; a later level
// redefining an existing pair is reported as a violation.
FilteredValidationResult validate_filtered_monoid(const RawMonoid& raw);

// Stock monoids.  Each returns a validated value or throws
// std::invalid_argument on a bad parameter.
PartialMonoid cyclic_group(unsigned q);          // Z/q, q >= 1
PartialMonoid trivial_monoid(unsigned q);        // q nonzero elements, no sums
PartialMonoid truncated_naturals(int n);         // {0..n}, a+b defined iff <= n
PartialMonoid single_sum_monoid();               // {0,a,b,c} with a+b = c

// Levels 0..n-1; level i defines the nonzero sums with total <= i + 1.
FilteredPartialMonoid filtered_truncated_naturals(int n);  // n >= 1

// The constant filtration with `levels` copies of m.
FilteredPartialMonoid constant_filtration(const PartialMonoid& m,
                                          std::size_t levels = 1);

// Text format:
//   elements: <name> <name> ...
//   zero: <name>
//   <a> + <b> = <c>
// with optional cumulative "level <i>:" section headers for filtrations and
// '#' comments.  Names are whitespace-free and may not contain ',', '+',
// '=', '{', '}', '#' or end with ':'.  Throws ParseError on malformed input.
RawMonoid parse_monoid_text(std::istream& in);
RawMonoid parse_monoid_file(const std::string& path);

}  // namespace pamdt

#endif
