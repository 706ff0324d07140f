// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "drinfeld/drinfeld.hpp"

using namespace drinfeld;

namespace {

using Level = std::array<int, 3>;

const std::vector<std::pair<int, int>> kWeight2Grid{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}};
const std::vector<std::pair<int, int>> kHigherGrid{{2, 1}, {2, 2}, {3, 1}};
constexpr std::uint64_t kSeed = 20240601;

std::string levelName(int q, int n, int k) {
  return "(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
}

const Certificate* findCert(const LevelResult& L, const std::string& lemma) {
  for (const auto& c : L.certs)
    if (c.lemma == lemma) return &c;
  return nullptr;
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& w) {
    if (ok) detail = w;
    ok = false;
  }
};

class Runner {
 public:
  Runner() {
    std::vector<Level> levels;
    for (auto [q, n] : kWeight2Grid) levels.push_back({q, n, 2});
    for (auto [q, n] : kHigherGrid)
      for (int k : {3, 4}) levels.push_back({q, n, k});
    for (int q : {2, 3})
      for (int k = 2; k <= 5; ++k) levels.push_back({q, 1, k});
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    const auto results = runLevels(levels, kSeed);
    for (std::size_t i = 0; i < levels.size(); ++i) results_.emplace(levels[i], results[i]);
  }

  const LevelResult& at(int q, int n, int k) const { return results_.at({q, n, k}); }

  Outcome dims(const std::vector<std::pair<int, int>>& grid, const std::vector<int>& weights) const {
    Outcome o;
    for (auto [q, n] : grid)
      for (int k : weights) {
        const Certificate* c = findCert(at(q, n, k), "cocycle-dimension");
        if (!c || !c->ok) o.fail(levelName(q, n, k) + ": " + (c ? c->witness : "missing"));
        else if (o.ok) o.detail += levelName(q, n, k) + " " + c->witness + "; ";
      }
    return o;
  }

  const std::map<Level, LevelResult>& results() const { return results_; }

 private:
  std::map<Level, LevelResult> results_;
};

Outcome criterion3(const Runner& R) {
  Outcome o;
  for (auto [q, n] : kWeight2Grid) {
    const LevelResult& L = R.at(q, n, 2);
    if (!L.solved) {
      o.fail(levelName(q, n, 2) + " not solved");
      continue;
    }
    const OrdinaryCertificate& c = L.ordinary;
    const RatFunc one = RatFunc::one(FiniteField::get(q));
    UniPoly<RatFunc> want = UniPoly<RatFunc>::x_power(c.d - static_cast<int>(c.r), one);
    for (long long j = 0; j < c.r; ++j) want = want * UniPoly<RatFunc>::linear(one, one);
    if (c.r != ipow(q, n - 1)) o.fail(levelName(q, n, 2) + " r = " + std::to_string(c.r));
    if (!(c.chi == want)) o.fail(levelName(q, n, 2) + " charpoly " + c.chi.to_string());
    if (!c.valid()) o.fail(levelName(q, n, 2) + " " + c.witness);
    std::size_t expectOps = q == 2 ? 2 : 1;
    if (c.hecke.size() != expectOps) o.fail(levelName(q, n, 2) + " wrong T_m list");
  }
  if (o.ok) o.detail = "charpoly(Ut) = X^(d-r)(X-1)^r and T_m trivial on the ordinary part for all 6 levels";
  return o;
}

Outcome criterion4(const Runner& R) {
  Outcome o;
  int scalarOff = 0;
  for (auto [q, n] : kHigherGrid)
    for (int k : {3, 4}) {
      const LevelResult& L = R.at(q, n, k);
      if (!L.solved) {
        o.fail(levelName(q, n, k) + " not solved");
        continue;
      }
      const OrdinaryCertificate& c = L.ordinary;
      if (!c.utFlagsOk()) o.fail(levelName(q, n, k) + " " + c.witness);
      for (const auto& h : c.hecke) {
        if (h.status == "scalar-off") {
          ++scalarOff;
          o.detail += levelName(q, n, k) + " " + h.name + " scalar-off by " + h.scalar + "; ";
        } else if (h.status != "pass") {
          o.fail(levelName(q, n, k) + " " + h.name + " not trivial on the ordinary part");
        }
      }
    }
  if (o.ok) o.detail += scalarOff == 0 ? "all U_t and T_m flags pass for k in {3,4}" : "U_t flags pass";
  return o;
}

Outcome criterion5(const Runner& R) {
  Outcome o;
  for (int q : {2, 3})
    for (int k = 2; k <= 5; ++k) {
      const LevelResult& L = R.at(q, 1, k);
      if (!L.solved) {
        o.fail(levelName(q, 1, k) + " not solved");
        continue;
      }
      const OrdinaryCertificate& c = L.ordinary;
      // Ordinary dimension 1: (X-1) divides chi exactly once and chi_plus has no unit roots.
      if (c.r != 1 || !c.valid()) o.fail(levelName(q, 1, k) + " " + c.witness);
      const RatFunc one = RatFunc::one(FiniteField::get(q));
      if (UniPoly<RatFunc>::divmod(c.chi_plus, UniPoly<RatFunc>::linear(one, one)).second.degree() < 0)
        o.fail(levelName(q, 1, k) + " eigenvalue 1 has multiplicity > 1");
    }
  if (o.ok) o.detail = "ordinary part is 1-dimensional with U_t = T_m = 1 on it, q in {2,3}, k = 2..5";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const Certificate c = verifyFreeness(GroupContext(q, n));
    if (!c.ok) o.fail("(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ") " + c.witness);
    else o.detail += "(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ") " + c.witness + "; ";
  }
  return o;
}

Outcome fromCerts(const std::vector<Certificate>& cs) {
  Outcome o;
  for (const auto& c : cs) {
    std::string p;
    for (const auto& [k, v] : c.params) p += k + "=" + v + " ";
    if (!c.ok) o.fail(c.lemma + " " + p + c.witness);
  }
  if (o.ok) o.detail = std::to_string(cs.size()) + " certificates";
  return o;
}

Outcome criterion7() {
  std::vector<Certificate> cs;
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (auto& c : runCongruenceSuite(q, n)) cs.push_back(c);
  return fromCerts(cs);
}

Outcome criterion8() {
  std::vector<Certificate> cs;
  for (int q : {2, 3})
    for (auto& c : runGossSuite(q, q * q, 64, 3)) cs.push_back(c);
  return fromCerts(cs);
}

Outcome criterion9(const Runner& R) {
  const std::vector<std::string> required{"harmonicity",      "antisymmetry",          "equivariance",
                                          "depth-stability",  "diamond-hecke-commutation", "classify-invariance",
                                          "source-sum",       "diamond-homomorphism"};
  Outcome o;
  int checked = 0;
  for (const auto& [lvl, L] : R.results())
    for (const auto& name : required) {
      const Certificate* c = findCert(L, name);
      if (!c) o.fail(levelName(lvl[0], lvl[1], lvl[2]) + " missing " + name);
      else if (!c->ok) o.fail(levelName(lvl[0], lvl[1], lvl[2]) + " " + name + ": " + c->witness);
      else ++checked;
    }
  if (o.ok) o.detail = std::to_string(checked) + " property certificates over " + std::to_string(R.results().size()) + " levels";
  return o;
}

Outcome criterion10(const Runner& R) {
  // Excluded computation; the report must carry the nilpotent-block evidence
  // and say that the subspace itself is not computed.
  Outcome o;
  for (auto [q, n] : kWeight2Grid) {
    const Certificate* c = findCert(R.at(q, n, 2), "nilpotent-block");
    if (!c || !c->ok) o.fail(levelName(q, n, 2) + " nilpotent block evidence missing or failing");
    else if (c->witness.find("not computed") == std::string::npos) o.fail(levelName(q, n, 2) + " exclusion not documented");
  }
  if (o.ok) o.detail = "excluded (S_2^(2) and the filtration are not computed); nilpotent U_t block verified for the weight-2 grid";
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const Runner R;
  const double shared = std::chrono::duration<double>(clock::now() - t0).count();
  std::printf("level computations: %zu levels in %.2fs\n", R.results().size(), shared);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"weight-2 cocycle dimension q^(2(n-1))", [&] { return R.dims(kWeight2Grid, {2}); }},
      {"higher-weight dimension (k-1)q^(2(n-1))", [&] { return R.dims(kHigherGrid, {3, 4}); }},
      {"weight-2 ordinary certificate", [&] { return criterion3(R); }},
      {"higher-weight ordinary certificate", [&] { return criterion4(R); }},
      {"level t reproduction, k = 2..5", [&] { return criterion5(R); }},
      {"Theta_n freeness", criterion6},
      {"congruence lemma suite", criterion7},
      {"Carlitz-Goss suite", criterion8},
      {"property suites", [&] { return criterion9(R); }},
      {"excluded: S_2^(2) and filtration", [&] { return criterion10(R); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = clock::now();
    const Outcome o = criteria[i].second();
    const double s = std::chrono::duration<double>(clock::now() - t).count();
    failures += !o.ok;
    std::printf("criterion %zu: %s  %s (%.2fs) %s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), s, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
