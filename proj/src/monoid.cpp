#include "pamdt/monoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pamdt/util.hpp"

namespace pamdt {

Multiset canonical_multiset(Multiset items) {
  std::sort(items.begin(), items.end());
  return items;
}

std::optional<ElemId> PartialMonoid::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemId PartialMonoid::require(std::string_view name) const {
  auto id = find(name);
  if (!id) throw std::out_of_range("element not in carrier: " + std::string(name));
  return *id;
}

std::optional<ElemId> PartialMonoid::sum(ElemId a, ElemId b) const {
  if (a >= size() || b >= size())
    throw std::out_of_range("element id outside carrier");
  std::int32_t v = table_[a * size() + b];
  if (v < 0) return std::nullopt;
  return static_cast<ElemId>(v);
}

std::optional<ElemId> PartialMonoid::compose_value(const Multiset& ms) const {
  if (ms.empty()) return zero_;
  if (ms.size() == 1) return ms[0];
  {
    std::lock_guard<std::mutex> lk(memo_->mu);
    auto it = memo_->map.find(ms);
    if (it != memo_->map.end()) return it->second;
  }
  std::optional<ElemId> result;
  // Try each unordered pair of positions once per distinct value pair; by
  // coherence one successful reduction order certifies the multiset.
  std::set<std::pair<ElemId, ElemId>> tried;
  for (std::size_t i = 0; i + 1 < ms.size() && !result; ++i) {
    for (std::size_t j = i + 1; j < ms.size() && !result; ++j) {
      if (!tried.insert({ms[i], ms[j]}).second) continue;
      auto s = sum(ms[i], ms[j]);
      if (!s) continue;
      Multiset child;
      child.reserve(ms.size() - 1);
      for (std::size_t t = 0; t < ms.size(); ++t)
        if (t != i && t != j) child.push_back(ms[t]);
      child.insert(std::upper_bound(child.begin(), child.end(), *s), *s);
      result = compose_value(child);
    }
  }
  std::lock_guard<std::mutex> lk(memo_->mu);
  memo_->map.emplace(ms, result);
  return result;
}

bool PartialMonoid::composable(const Multiset& items) const {
  for (ElemId e : items)
    if (e >= size()) throw std::out_of_range("element id outside carrier");
  return compose_value(canonical_multiset(items)).has_value();
}

ElemId PartialMonoid::multiset_sum(const Multiset& items) const {
  for (ElemId e : items)
    if (e >= size()) throw std::out_of_range("element id outside carrier");
  auto v = compose_value(canonical_multiset(items));
  if (!v) throw std::invalid_argument("multiset is not composable");
  return *v;
}

std::vector<ComposableTuple> PartialMonoid::composable_tuples(int k) const {
  if (k < 0) throw std::invalid_argument("tuple length must be nonnegative");
  std::vector<ComposableTuple> out;
  std::vector<ElemId> cur;
  // Depth-first in element-id order; prefixes are pruned by composability,
  // which is sound because composable multisets are closed under taking
  // sub-multisets.
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      out.push_back({cur, true});
      return;
    }
    for (ElemId e = 0; e < size(); ++e) {
      cur.push_back(e);
      if (compose_value(canonical_multiset(cur)).has_value())
        self(self, depth + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<std::pair<std::pair<ElemId, ElemId>, ElemId>>
PartialMonoid::defined_pairs() const {
  std::vector<std::pair<std::pair<ElemId, ElemId>, ElemId>> out;
  for (ElemId a = 0; a < size(); ++a)
    for (ElemId b = a; b < size(); ++b) {
      std::int32_t v = table_[a * size() + b];
      if (v >= 0) out.push_back({{a, b}, static_cast<ElemId>(v)});
    }
  return out;
}

std::string PartialMonoid::canonical_text() const {
  std::ostringstream os;
  os << "elements:";
  for (const auto& n : names_) os << ' ' << n;
  os << "\nzero: " << names_[zero_] << '\n';
  for (const auto& [pair, v] : defined_pairs())
    os << names_[pair.first] << " + " << names_[pair.second] << " = "
       << names_[v] << '\n';
  return os.str();
}

std::uint64_t PartialMonoid::hash() const { return fnv1a64(canonical_text()); }

std::optional<std::size_t> FilteredPartialMonoid::composable_level(
    const Multiset& items) const {
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].composable(items)) return i;
  return std::nullopt;
}

std::string FilteredPartialMonoid::canonical_text() const {
  std::ostringstream os;
  os << "elements:";
  for (const auto& n : top().element_names()) os << ' ' << n;
  os << "\nzero: " << top().element_names()[top().zero()] << '\n';
  std::set<std::pair<ElemId, ElemId>> seen;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    os << "level " << i << ":\n";
    for (const auto& [pair, v] : levels_[i].defined_pairs()) {
      if (!seen.insert(pair).second) continue;
      os << top().element_names()[pair.first] << " + "
         << top().element_names()[pair.second] << " = "
         << top().element_names()[v] << '\n';
    }
  }
  return os.str();
}

std::uint64_t FilteredPartialMonoid::hash() const {
  return fnv1a64(canonical_text());
}

// ---------------------------------------------------------------------------
// Validation

struct MonoidBuilder {
  std::vector<std::string> violations;
  std::vector<std::string> names;
  std::unordered_map<std::string, ElemId> index;
  ElemId zero = 0;
  bool carrier_ok = false;

  static bool name_allowed(const std::string& n) {
    if (n.empty()) return false;
    if (n.back() == ':') return false;
    for (char c : n)
      if (c == ',' || c == '+' || c == '=' || c == '{' || c == '}' || c == '#')
        return false;
    return true;
  }

  void build_carrier(const RawMonoid& raw) {
    if (raw.elements.empty()) violations.push_back("no elements declared");
    for (const auto& n : raw.elements) {
      if (!name_allowed(n)) {
        violations.push_back("element name not allowed: '" + n + "'");
        continue;
      }
      if (!index.emplace(n, static_cast<ElemId>(names.size())).second) {
        violations.push_back("duplicate element identifier: '" + n + "'");
        continue;
      }
      names.push_back(n);
    }
    auto z = index.find(raw.zero);
    if (z == index.end()) {
      violations.push_back("zero '" + raw.zero + "' missing from element list");
      return;
    }
    zero = z->second;
    carrier_ok = violations.empty();
  }

  // Adds one layer of entries to `table` (size n*n, -1 undefined), reporting
  // conflicts.  `layer` names the level for messages; empty for plain monoids.
  void apply_entries(std::vector<std::int32_t>& table,
                     const std::vector<SumEntry>& entries,
                     const std::string& layer) {
    const std::size_t n = names.size();
    auto resolve = [&](const std::string& name, int line) -> std::int32_t {
      auto it = index.find(name);
      if (it != index.end()) return static_cast<std::int32_t>(it->second);
      violations.push_back(layer + "unknown element '" + name +
                           "' in sum entry (line " + std::to_string(line) +
                           ")");
      return -1;
    };
    for (const auto& e : entries) {
      std::int32_t a = resolve(e.lhs, e.line);
      std::int32_t b = resolve(e.rhs, e.line);
      std::int32_t v = resolve(e.value, e.line);
      if (a < 0 || b < 0 || v < 0) continue;
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        std::int32_t& cell = table[x * n + y];
        if (cell >= 0 && cell != v) {
          violations.push_back(layer + "conflicting values for " + names[x] +
                               " + " + names[y] + ": " + names[cell] +
                               " vs " + names[v] + " (line " +
                               std::to_string(e.line) + ")");
        } else {
          cell = v;
        }
      }
    }
  }

  void close_units(std::vector<std::int32_t>& table, const std::string& layer) {
    const std::size_t n = names.size();
    for (ElemId m = 0; m < n; ++m) {
      for (auto [x, y] : {std::pair{zero, m}, std::pair{m, zero}}) {
        std::int32_t& cell = table[x * n + y];
        if (cell >= 0 && cell != static_cast<std::int32_t>(m)) {
          violations.push_back(layer + "unit axiom violated: " + names[x] +
                               " + " + names[y] + " = " + names[cell]);
        } else {
          cell = static_cast<std::int32_t>(m);
        }
      }
    }
  }

  void check_coherence(const std::vector<std::int32_t>& table,
                       const std::string& layer) {
    const std::size_t n = names.size();
    auto at = [&](std::int32_t x, std::int32_t y) { return table[x * n + y]; };
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b)
        for (ElemId c = 0; c < n; ++c) {
          std::int32_t bc = at(b, c);
          if (bc < 0) continue;
          std::int32_t whole = at(a, bc);
          if (whole < 0) continue;
          std::string triple = "(" + names[a] + ", " + names[b] + ", " +
                               names[c] + ")";
          std::int32_t ab = at(a, b);
          if (ab < 0) {
            violations.push_back(layer + "coherence violated for " + triple +
                                 ": " + names[a] + " + (" + names[b] + " + " +
                                 names[c] + ") is defined but " + names[a] +
                                 " + " + names[b] + " is not");
            continue;
          }
          std::int32_t left = at(ab, c);
          if (left < 0) {
            violations.push_back(layer + "coherence violated for " + triple +
                                 ": (" + names[a] + " + " + names[b] + ") + " +
                                 names[c] + " is undefined");
          } else if (left != whole) {
            violations.push_back(layer + "coherence violated for " + triple +
                                 ": bracketings give " + names[left] +
                                 " and " + names[whole]);
          }
        }
  }

  PartialMonoid finish(std::vector<std::int32_t> table) const {
    PartialMonoid m;
    m.names_ = names;
    m.index_ = index;
    m.zero_ = zero;
    m.table_ = std::move(table);
    m.memo_ = std::make_shared<PartialMonoid::Memo>();
    return m;
  }
};

ValidationResult validate_monoid(const RawMonoid& raw) {
  ValidationResult res;
  if (raw.levels.size() != 1) {
    res.violations.push_back(
        "description declares filtration levels; expected a plain monoid");
    return res;
  }
  MonoidBuilder b;
  b.build_carrier(raw);
  if (!b.carrier_ok) {
    res.violations = std::move(b.violations);
    return res;
  }
  std::vector<std::int32_t> table(b.names.size() * b.names.size(), -1);
  b.apply_entries(table, raw.levels[0], "");
  b.close_units(table, "");
  if (b.violations.empty()) b.check_coherence(table, "");
  res.violations = std::move(b.violations);
  if (res.violations.empty()) res.monoid = b.finish(std::move(table));
  return res;
}

FilteredValidationResult validate_filtered_monoid(const RawMonoid& raw) {
  FilteredValidationResult res;
  MonoidBuilder b;
  b.build_carrier(raw);
  if (!b.carrier_ok) {
    res.violations = std::move(b.violations);
    return res;
  }
  const std::size_t n = b.names.size();
  std::vector<std::int32_t> table(n * n, -1);
  b.close_units(table, "");
  if (!b.violations.empty()) {
    res.violations = std::move(b.violations);
    return res;
  }
  FilteredPartialMonoid fm;
  for (std::size_t lv = 0; lv < raw.levels.size(); ++lv) {
    std::string layer = "level " + std::to_string(lv) + ": ";
    std::size_t before = b.violations.size();
    b.apply_entries(table, raw.levels[lv], layer);
    if (b.violations.size() == before) b.check_coherence(table, layer);
    if (b.violations.size() == before) fm.levels_.push_back(b.finish(table));
  }
  res.violations = std::move(b.violations);
  if (res.violations.empty()) res.monoid = std::move(fm);
  return res;
}

// ---------------------------------------------------------------------------
// Stock monoids

namespace {

PartialMonoid must_validate(const RawMonoid& raw) {
  auto res = validate_monoid(raw);
  if (!res.ok())
    throw std::logic_error("stock monoid failed validation: " +
                           res.violations.front());
  return std::move(*res.monoid);
}

}  // namespace

PartialMonoid cyclic_group(unsigned q) {
  if (q == 0) throw std::invalid_argument("cyclic_group requires q >= 1");
  RawMonoid raw;
  for (unsigned i = 0; i < q; ++i) raw.elements.push_back(std::to_string(i));
  raw.zero = "0";
  for (unsigned i = 1; i < q; ++i)
    for (unsigned j = i; j < q; ++j)
      raw.levels[0].push_back({std::to_string(i), std::to_string(j),
                               std::to_string((i + j) % q)});
  return must_validate(raw);
}

PartialMonoid trivial_monoid(unsigned q) {
  RawMonoid raw;
  raw.elements.push_back("0");
  for (unsigned i = 1; i <= q; ++i)
    raw.elements.push_back("a" + std::to_string(i));
  raw.zero = "0";
  return must_validate(raw);
}

PartialMonoid truncated_naturals(int n) {
  if (n < 0) throw std::invalid_argument("truncated_naturals requires n >= 0");
  RawMonoid raw;
  for (int i = 0; i <= n; ++i) raw.elements.push_back(std::to_string(i));
  raw.zero = "0";
  for (int i = 1; i <= n; ++i)
    for (int j = i; i + j <= n; ++j)
      raw.levels[0].push_back({std::to_string(i), std::to_string(j),
                               std::to_string(i + j)});
  return must_validate(raw);
}

PartialMonoid single_sum_monoid() {
  RawMonoid raw;
  raw.elements = {"0", "a", "b", "c"};
  raw.zero = "0";
  raw.levels[0].push_back({"a", "b", "c"});
  return must_validate(raw);
}

FilteredPartialMonoid filtered_truncated_naturals(int n) {
  if (n < 1)
    throw std::invalid_argument("filtered_truncated_naturals requires n >= 1");
  RawMonoid raw;
  raw.filtered = true;
  for (int i = 0; i <= n; ++i) raw.elements.push_back(std::to_string(i));
  raw.zero = "0";
  raw.levels.assign(static_cast<std::size_t>(n), {});
  // Level lv holds the nonzero sums with total <= lv + 1, listed as the
  // increment over the previous level.
  for (int lv = 0; lv < n; ++lv) {
    int total = lv + 1;
    for (int i = 1; i <= total / 2; ++i)
      raw.levels[lv].push_back({std::to_string(i), std::to_string(total - i),
                                std::to_string(total)});
  }
  auto res = validate_filtered_monoid(raw);
  if (!res.ok())
    throw std::logic_error("stock filtration failed validation: " +
                           res.violations.front());
  return std::move(*res.monoid);
}

FilteredPartialMonoid constant_filtration(const PartialMonoid& m,
                                          std::size_t levels) {
  if (levels == 0)
    throw std::invalid_argument("constant_filtration requires >= 1 level");
  FilteredPartialMonoid fm;
  fm.levels_.assign(levels, m);
  return fm;
}

}  // namespace pamdt
