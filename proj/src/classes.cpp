#include "dpl/classes.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dpl {

namespace {

void require_blow_up(const SurfaceLattice& lat) {
  if (lat.form() != LatticeForm::kBlowUp) {
    throw UnsupportedRankError("class enumeration needs a blow-up lattice");
  }
}

// All (a1..ar) with sum == target_sum and sum of squares == target_sq.
void search_tail(int r, std::int64_t target_sum, std::int64_t target_sq, DivisorClass& cur, int pos,
                 std::vector<DivisorClass>& out) {
  const std::int64_t left = r - pos + 1;  // slots pos..r
  if (left == 0) {
    if (target_sum == 0 && target_sq == 0) out.push_back(cur);
    return;
  }
  if (target_sq < 0 || target_sum * target_sum > left * target_sq) return;
  std::int64_t lim = 0;
  while ((lim + 1) * (lim + 1) <= target_sq) ++lim;
  for (std::int64_t a = -lim; a <= lim; ++a) {
    cur[static_cast<std::size_t>(pos)] = a;
    search_tail(r, target_sum - a, target_sq - a * a, cur, pos + 1, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

std::vector<DivisorClass> enumerate(const SurfaceLattice& lat, std::int64_t self, std::int64_t kdeg,
                                    int a0_lo, int a0_hi) {
  const int r = lat.rank();
  std::vector<DivisorClass> out;
  for (int a0 = a0_lo; a0 <= a0_hi; ++a0) {
    DivisorClass cur(r);
    cur[0] = a0;
    // c^2 = a0^2 - sum ai^2, c.K = -3 a0 - sum ai.
    const std::int64_t sq = std::int64_t{a0} * a0 - self;
    const std::int64_t sum = -kdeg - 3 * std::int64_t{a0};
    if (r == 0) {
      if (sq == 0 && sum == 0) out.push_back(cur);
      continue;
    }
    search_tail(r, sum, sq, cur, 1, out);
  }
  std::sort(out.begin(), out.end());
  const DivisorClass k = canonical_class(lat);
  for (const auto& c : out) {
    if (intersect(lat, c, c) != self || intersect(lat, c, k) != kdeg) {
      throw Error("enumeration produced a class violating its equations: " + c.to_string());
    }
  }
  return out;
}

std::string join_indices(const std::vector<int>& v) {
  std::string s;
  for (int i : v) s += std::to_string(i);
  return s;
}

}  // namespace

int pre_minus1_a0_bound(int rank) {
  if (rank < 0 || rank > kMaxRank) throw UnsupportedRankError("rank outside 0..8");
  int a0 = 0;
  // (3a0 - 1)^2 <= r (a0^2 + 1); the admissible set is an interval.
  while ((3 * (a0 + 1) - 1) * (3 * (a0 + 1) - 1) <= rank * ((a0 + 1) * (a0 + 1) + 1)) ++a0;
  return a0;
}

int root_a0_bound(int rank) {
  if (rank < 0 || rank > kMaxRank) throw UnsupportedRankError("rank outside 0..8");
  int a0 = 0;
  while ((9 - rank) * (a0 + 1) * (a0 + 1) <= 2 * rank) ++a0;
  return a0;
}

std::vector<DivisorClass> pre_minus1_classes(const SurfaceLattice& lat) {
  require_blow_up(lat);
  return enumerate(lat, -1, -1, 0, pre_minus1_a0_bound(lat.rank()));
}

std::vector<DivisorClass> root_classes(const SurfaceLattice& lat) {
  require_blow_up(lat);
  const int b = root_a0_bound(lat.rank());
  return enumerate(lat, -2, 0, -b, b);
}

std::string ClassName::str() const { return family + join_indices(indices); }

ClassName parse_class_name(const std::string& s) {
  std::size_t pos = 0;
  ClassName n;
  if (pos < s.size() && s[pos] == '-') n.family += s[pos++];
  if (pos >= s.size()) throw UnknownNameError("empty class name");
  n.family += s[pos++];
  if (pos < s.size() && s[pos] == '\'') n.family += s[pos++];
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) throw UnknownNameError("bad class name: " + s);
    n.indices.push_back(s[pos] - '0');
  }
  static const std::map<std::string, std::size_t> arity = {
      {"A", 1}, {"B", 2}, {"C", 2}, {"D", 1}, {"A'", 2}, {"B'", 3}, {"C'", 1}, {"-B'", 3}, {"-C'", 1}};
  auto it = arity.find(n.family);
  if (it == arity.end() || n.indices.size() != it->second) throw UnknownNameError("bad class name: " + s);
  std::set<int> seen;
  for (int i : n.indices) {
    if (i < 1 || i > 7 || !seen.insert(i).second) throw UnknownNameError("bad class name: " + s);
  }
  return n;
}

DivisorClass class_from_name(const ClassName& n) {
  DivisorClass c(7);
  auto at = [&](int i) -> std::int64_t& { return c[static_cast<std::size_t>(i)]; };
  auto all_minus = [&](std::int64_t a0) {
    at(0) = a0;
    for (int i = 1; i <= 7; ++i) at(i) = -1;
  };
  const auto& ix = n.indices;
  std::string fam = n.family;
  const bool neg = !fam.empty() && fam[0] == '-';
  if (neg) fam.erase(0, 1);
  if (fam == "A") {
    at(ix[0]) = 1;
  } else if (fam == "B") {
    at(0) = 1;
    at(ix[0]) = -1;
    at(ix[1]) = -1;
  } else if (fam == "C") {
    all_minus(2);
    at(ix[0]) = 0;
    at(ix[1]) = 0;
  } else if (fam == "D") {
    all_minus(3);
    at(ix[0]) = -2;
  } else if (fam == "A'") {
    at(ix[0]) = 1;
    at(ix[1]) = -1;
  } else if (fam == "B'") {
    at(0) = 1;
    for (int i : ix) at(i) = -1;
  } else if (fam == "C'") {
    all_minus(2);
    at(ix[0]) = 0;
  } else {
    throw UnknownNameError("unknown family " + n.family);
  }
  return neg ? -c : c;
}

std::vector<ClassName> family_members(const std::string& family) {
  std::vector<ClassName> out;
  const bool neg = !family.empty() && family[0] == '-';
  const std::string fam = neg ? family.substr(1) : family;
  auto push = [&](std::vector<int> ix) { out.push_back({family, std::move(ix)}); };
  if (fam == "A" || fam == "D" || fam == "C'") {
    if (neg && fam != "C'") throw UnknownNameError("unknown family " + family);
    for (int i = 1; i <= 7; ++i) push({i});
  } else if (fam == "B" || fam == "C") {
    if (neg) throw UnknownNameError("unknown family " + family);
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) push({i, j});
  } else if (fam == "A'") {
    if (neg) throw UnknownNameError("unknown family " + family);
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        if (i != j) push({i, j});
  } else if (fam == "B'") {
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) push({i, j, k});
  } else {
    throw UnknownNameError("unknown family " + family);
  }
  return out;
}

ClassCatalog::ClassCatalog(const SurfaceLattice& lat)
    : lat_(lat), k_(canonical_class(lat)), pre_(pre_minus1_classes(lat)), roots_(root_classes(lat)) {
  for (std::size_t i = 0; i < pre_.size(); ++i) pre_pos_.emplace(pre_[i], i);
  for (std::size_t i = 0; i < roots_.size(); ++i) root_pos_.emplace(roots_[i], i);
  pre_names_.resize(pre_.size());
  root_names_.resize(roots_.size());
  if (!named()) {
    for (std::size_t i = 0; i < pre_.size(); ++i) pre_names_[i] = pre_[i].to_string();
    for (std::size_t i = 0; i < roots_.size(); ++i) root_names_[i] = roots_[i].to_string();
    return;
  }
  for (const char* fam : {"A", "B", "C", "D"}) {
    for (const auto& n : family_members(fam)) {
      const auto pos = pre_pos_.at(class_from_name(n));
      pre_names_[pos] = n.str();
      pre_by_name_[n.str()] = pos;
    }
  }
  for (const char* fam : {"A'", "B'", "C'", "-B'", "-C'"}) {
    for (const auto& n : family_members(fam)) {
      const auto pos = root_pos_.at(class_from_name(n));
      root_names_[pos] = n.str();
      root_by_name_[n.str()] = pos;
    }
  }
  if (pre_by_name_.size() != pre_.size() || root_by_name_.size() != roots_.size()) {
    throw Error("degree-2 names do not cover the catalog");
  }
}

std::optional<std::size_t> ClassCatalog::pre_index(const DivisorClass& c) const {
  auto it = pre_pos_.find(c);
  if (it == pre_pos_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ClassCatalog::root_index(const DivisorClass& c) const {
  auto it = root_pos_.find(c);
  if (it == root_pos_.end()) return std::nullopt;
  return it->second;
}

std::string ClassCatalog::pre_name(std::size_t i) const { return pre_names_.at(i); }
std::string ClassCatalog::root_name(std::size_t i) const { return root_names_.at(i); }

std::size_t ClassCatalog::pre_by_name(const std::string& name) const {
  auto it = pre_by_name_.find(name);
  if (it == pre_by_name_.end()) throw UnknownNameError("no pre(-1) class named " + name);
  return it->second;
}

std::size_t ClassCatalog::root_by_name(const std::string& name) const {
  auto it = root_by_name_.find(name);
  if (it == root_by_name_.end()) throw UnknownNameError("no root named " + name);
  return it->second;
}

const ClassCatalog& degree2_catalog() {
  static const ClassCatalog cat(SurfaceLattice(7));
  return cat;
}

std::vector<TableRule> intersection_table(const ClassCatalog& cat, const std::string& left_family,
                                          const std::string& right_family) {
  if (!cat.named()) throw UnknownNameError("tables need the rank-7 catalog");
  static const std::set<std::string> allowed = {"A", "B", "C", "D", "A'", "B'", "C'"};
  if (!allowed.count(left_family) || !allowed.count(right_family)) {
    throw UnknownNameError("unknown family pair " + left_family + "/" + right_family);
  }
  static const char* kLeft = "ijk";
  static const char* kRight = "lmn";
  std::map<std::string, TableRule> rules;
  for (const auto& a : family_members(left_family)) {
    for (const auto& b : family_members(right_family)) {
      std::string pat;
      for (std::size_t x = 0; x < a.indices.size(); ++x)
        for (std::size_t y = 0; y < b.indices.size(); ++y)
          if (a.indices[x] == b.indices[y]) {
            if (!pat.empty()) pat += ',';
            pat += kLeft[x];
            pat += '=';
            pat += kRight[y];
          }
      if (pat.empty()) pat = "disjoint";
      const auto v = cat.dot(class_from_name(a), class_from_name(b));
      auto [it, fresh] = rules.try_emplace(pat, TableRule{left_family, right_family, pat, v, 0});
      if (!fresh && it->second.value != v) {
        throw Error("pattern " + pat + " is not constant for " + left_family + "/" + right_family);
      }
      ++it->second.pairs;
    }
  }
  std::vector<TableRule> out;
  for (auto& [k, v] : rules) out.push_back(v);
  return out;
}

}  // namespace dpl
