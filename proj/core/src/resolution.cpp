#include "tensorcoh/resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) s += v;
  return s;
}

std::string BettiTable::staircase() const {
  if (entries_.empty()) return "total: 0\n";
  int imax = 0, rmin = INT32_MAX, rmax = INT32_MIN;
  for (const auto& [k, v] : entries_) {
    imax = std::max(imax, k.first);
    rmin = std::min(rmin, k.second - k.first);
    rmax = std::max(rmax, k.second - k.first);
  }
  std::vector<std::string> head{"", "total:"};
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> tot{"total:"};
  for (int i = 0; i <= imax; ++i) tot.push_back(std::to_string(total(i)));
  rows.push_back(tot);
  for (int r = rmin; r <= rmax; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= imax; ++i) {
      std::int64_t b = at(i, i + r);
      row.push_back(b ? std::to_string(b) : ".");
    }
    rows.push_back(row);
  }
  std::size_t w0 = 0, w = 1;
  for (const auto& row : rows) {
    w0 = std::max(w0, row[0].size());
    for (std::size_t c = 1; c < row.size(); ++c) w = std::max(w, row[c].size());
  }
  std::ostringstream out;
  out << std::string(w0, ' ');
  for (int i = 0; i <= imax; ++i) out << ' ' << std::string(w - std::to_string(i).size(), ' ') << i;
  out << '\n';
  for (const auto& row : rows) {
    out << std::string(w0 - row[0].size(), ' ') << row[0];
    for (std::size_t c = 1; c < row.size(); ++c) out << ' ' << std::string(w - row[c].size(), ' ') << row[c];
    out << '\n';
  }
  return out.str();
}

BettiTable Resolution::betti() const {
  std::map<std::pair<int, int>, std::int64_t> e;
  for (std::size_t i = 0; i < complex.twists.size(); ++i)
    for (int t : complex.twists[i]) ++e[{static_cast<int>(i), t}];
  return BettiTable(std::move(e), bound);
}

ProjDim Resolution::pd() const {
  if (complex.twists.empty() || complex.twists[0].empty()) return {-1, false};
  if (terminated) return {static_cast<int>(length()), false};
  return {static_cast<int>(length()), true};
}

int default_bound(const RingPtr& R) { return R->nvars() + 1; }

namespace {

std::shared_ptr<const Resolution> compute(const ModulePtr& M, bool over_ambient, int bound,
                                          const std::shared_ptr<const Resolution>& start) {
  auto res = std::make_shared<Resolution>();
  ModulePtr base = over_ambient ? M->over_ambient() : M->minimal();
  res->module = M;
  res->over_ambient = over_ambient;
  res->bound = bound;
  res->complex.ring = base->ring();
  if (start) {
    res->complex = start->complex;
  } else {
    res->complex.twists.push_back(base->twists());
    if (base->twists().empty()) {
      res->terminated = true;
      return res;
    }
    if (base->presentation().ncols() == 0) {
      res->terminated = true;
      return res;
    }
    res->complex.maps.push_back(base->presentation());
    res->complex.twists.push_back(base->presentation().source());
  }
  while (static_cast<int>(res->complex.maps.size()) < bound) {
    GradedMap next = syzygies(res->complex.maps.back());
    if (next.ncols() == 0) {
      res->terminated = true;
      return res;
    }
    res->complex.twists.push_back(next.source());
    res->complex.maps.push_back(std::move(next));
  }
  return res;
}

}  // namespace

std::shared_ptr<const Resolution> resolve(const ModulePtr& M, bool over_ambient, int bound) {
  if (bound < 1) throw RangeError("resolution bound must be at least 1");
  auto cached = M->cached_resolution(over_ambient, bound);
  if (cached && (cached->terminated || cached->bound >= bound)) {
    if (cached->bound == bound || cached->terminated) return cached;
    auto cut = std::make_shared<Resolution>(*cached);
    cut->bound = bound;
    while (static_cast<int>(cut->complex.maps.size()) > bound) {
      cut->complex.maps.pop_back();
      cut->complex.twists.pop_back();
    }
    cut->terminated = false;
    return cut;
  }
  auto res = compute(M, over_ambient, bound, cached && !cached->terminated ? cached : nullptr);
  M->store_resolution(over_ambient, res);
  return res;
}

std::shared_ptr<const Resolution> ambient_resolution(const ModulePtr& M) {
  return resolve(M, true, M->ring()->nvars() + 1);
}

BettiTable betti(const ModulePtr& M, bool over_ambient, int bound) { return resolve(M, over_ambient, bound)->betti(); }

ProjDim pd(const ModulePtr& M, bool over_ambient, int bound) { return resolve(M, over_ambient, bound)->pd(); }

ModulePtr syzygy_module(const ModulePtr& M, int i, bool over_ambient) {
  if (i < 0) throw RangeError("negative syzygy index");
  if (i == 0) return over_ambient ? M->over_ambient() : M->minimal();
  auto res = resolve(M, over_ambient, i + 1);
  const RingPtr& R = res->complex.ring;
  if (static_cast<std::size_t>(i) > res->length()) return GradedModule::zero(R);
  if (static_cast<std::size_t>(i) == res->length())
    return free_module(R, res->complex.free_twists(static_cast<std::size_t>(i)));
  return GradedModule::coker(res->complex.maps[static_cast<std::size_t>(i)])->minimal();
}

ModulePtr transpose(const ModulePtr& M) {
  const GradedMap& A = M->minimal()->presentation();
  return GradedModule::coker(A.dual())->minimal();
}

SubQuotient ext(const ModulePtr& M, const ModulePtr& N, int i) {
  if (i < 0) throw RangeError("negative Ext index");
  auto res = resolve(M, false, i + 1);
  return hom_cohomology(res->complex, static_cast<std::size_t>(i), N);
}

SubQuotient tor(const ModulePtr& M, const ModulePtr& N, int i) {
  if (i < 0) throw RangeError("negative Tor index");
  auto res = resolve(M, false, i + 1);
  return tensor_homology(res->complex, static_cast<std::size_t>(i), N);
}

SubQuotient ext_ambient(const ModulePtr& M, int i, int shift) {
  if (i < 0) throw RangeError("negative Ext index");
  auto res = ambient_resolution(M);
  RingPtr S = res->complex.ring;
  return hom_cohomology(res->complex, static_cast<std::size_t>(i), free_module(S, {shift}));
}

}  // namespace tensorcoh
