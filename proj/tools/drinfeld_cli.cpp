// drinfeld: command-line front end for the cocycle engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource bound exceeded.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "drinfeld/drinfeld.hpp"

using namespace drinfeld;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int q = 2, n = 1, k = 2, depth = -1;
  std::vector<std::string> ops;
  std::string format = "json";
  std::string out;
  std::string suite = "paper";
  std::string import_path;
  std::uint64_t seed = 1;
  int nmax = -1, kmax = 4, imax = -1;
  long long max_orbits = -1;
  bool certify = false;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out, std::ios::binary);
  if (!os) throw UsageError("cannot write " + cfg.out);
  os << text;
}

void requireFormat(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  throw UsageError("format '" + cfg.format + "' is not available for this command");
}

void validate(const Config& cfg) {
  if (!FiniteField::is_prime_power(cfg.q) || cfg.q > FiniteField::kMaxOrder)
    throw UsageError("--q must be a prime power <= " + std::to_string(FiniteField::kMaxOrder));
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  if (cfg.k < 2) throw UsageError("--k must be >= 2");
  // Row tables have q^{2n} entries.
  const double rows = std::pow(static_cast<double>(cfg.q), 2.0 * cfg.n);
  if (rows > 4.0e6) throw ResourceError("q^(2n) = " + std::to_string(static_cast<long long>(rows)) + " bottom rows exceeds the table bound");
}

std::string csvEscape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

std::string latexEntry(const RatFunc& x) {
  if (x.is_zero()) return "0";
  if (x.den().is_one()) return x.num().to_string();
  return "\\frac{" + x.num().to_string() + "}{" + x.den().to_string() + "}";
}

std::string latexMatrix(const MatK& m) {
  std::string s = "\\begin{pmatrix}\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) s += (j ? " & " : "") + latexEntry(m(i, j));
    s += i + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return s + "\\end{pmatrix}";
}

std::string entryText(const RatFunc& x) { return x.is_zero() ? "0" : x.den().is_one() ? x.num().to_string() : "(" + x.num().to_string() + ")/(" + x.den().to_string() + ")"; }

int cmdDims(const Config& cfg) {
  validate(cfg);
  requireFormat(cfg, {"json", "csv"});
  const GroupContext ctx(cfg.q, cfg.n);
  const long long g = genus(cfg.q, cfg.n), h = cuspCount(cfg.q, cfg.n), dim = dimSk(cfg.q, cfg.n, cfg.k);
  const long long r = ipow(cfg.q, cfg.n - 1);
  long long computed = -1;
  std::string error;
  try {
    computed = solveCocycleSpace(ctx, cfg.k, cfg.depth)->dim();
  } catch (const DimensionMismatch& e) {
    error = e.what();
  } catch (const DepthInstability& e) {
    error = e.what();
  }
  const bool ok = error.empty() && computed == dim;
  if (cfg.format == "csv") {
    emit(cfg, "q,n,k,g,h,dim,r,cocycle_dim,ok\n" + std::to_string(cfg.q) + "," + std::to_string(cfg.n) + "," +
                  std::to_string(cfg.k) + "," + std::to_string(g) + "," + std::to_string(h) + "," + std::to_string(dim) +
                  "," + std::to_string(r) + "," + std::to_string(computed) + "," + (ok ? "true" : "false") + "\n");
  } else {
    json j = {{"q", cfg.q}, {"n", cfg.n}, {"k", cfg.k}, {"g", g}, {"h", h}, {"dim", dim}, {"r", r}, {"cocycle_dim", computed}, {"ok", ok}};
    if (!error.empty()) j["error"] = error;
    emit(cfg, j.dump(2) + "\n");
  }
  return ok ? kOk : kFail;
}

OperatorMatrix buildOperator(const CocycleSpace& S, const std::string& opText) {
  const FiniteField& f = S.field();
  if (opText == "Ut") return heckeUt(S);
  const auto colon = opText.find(':');
  if (colon == std::string::npos) throw UsageError("unknown operator '" + opText + "' (use Ut, Tm:<poly>, Diamond:<poly>)");
  const std::string kind = opText.substr(0, colon);
  Poly p(f);
  try {
    p = Poly::parse(f, opText.substr(colon + 1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad polynomial in '") + opText + "': " + e.what());
  }
  try {
    if (kind == "Tm") return heckeTm(S, p);
    if (kind == "Diamond") return diamond(S, p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown operator kind '" + kind + "'");
}

int cmdHecke(const Config& cfg) {
  validate(cfg);
  requireFormat(cfg, {"json", "csv", "latex"});
  std::vector<std::string> ops = cfg.ops.empty() ? std::vector<std::string>{"Ut"} : cfg.ops;
  const GroupContext ctx(cfg.q, cfg.n);
  auto S = solveCocycleSpace(ctx, cfg.k, cfg.depth);
  if (cfg.k == 2) S->canonicalizeWeight2();
  std::vector<OperatorMatrix> mats;
  for (const auto& o : ops) mats.push_back(buildOperator(*S, o));

  std::optional<OrdinaryCertificate> cert;
  if (cfg.certify) {
    std::vector<OperatorMatrix> heckeList;
    for (const auto& m : mats)
      if (m.name.rfind("Tm:", 0) == 0) heckeList.push_back(m);
    cert = ordinaryCertificate(*S, heckeUt(*S).m, heckeList);
  }

  std::string text;
  if (cfg.format == "json") {
    json j = {{"q", cfg.q}, {"n", cfg.n}, {"k", cfg.k}, {"depth", S->depth()}, {"dim", S->dim()}};
    j["basis"] = cfg.k == 2 ? "delta [c,d]" : "kernel";
    if (!S->labels().empty()) {
      json labels = json::array();
      for (const auto& [c, d] : S->labels()) labels.push_back("[" + c.to_string() + "," + d.to_string() + "]");
      j["labels"] = labels;
    }
    json arr = json::array();
    for (const auto& m : mats)
      arr.push_back({{"name", m.name}, {"matrix", toJson(m.m)}, {"charpoly_text", m.m.charpoly(S->one()).to_string()}});
    j["operators"] = arr;
    if (cert) j["certificate"] = toJson(*cert);
    text = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    for (const auto& m : mats) {
      text += "# " + m.name + "\n";
      for (int i = 0; i < m.m.rows(); ++i) {
        for (int c = 0; c < m.m.cols(); ++c) text += (c ? "," : "") + csvEscape(entryText(m.m(i, c)));
        text += "\n";
      }
    }
    if (cert) text += "# certificate," + std::string(cert->valid() ? "valid" : "invalid") + "," + csvEscape(cert->witness) + "\n";
  } else {
    for (const auto& m : mats) text += "% " + m.name + "\n" + latexMatrix(m.m) + "\n";
    if (cert) text += "% certificate: " + std::string(cert->valid() ? "valid" : "invalid") + "\n";
  }
  emit(cfg, text);
  return cert && !cert->valid() ? kFail : kOk;
}

int cmdVerify(const Config& cfg) {
  requireFormat(cfg, {"json", "csv"});
  std::vector<Certificate> certs;
  if (cfg.suite == "goss") {
    validate(cfg);
    certs = runGossSuite(cfg.q, cfg.imax > 0 ? cfg.imax : cfg.q * cfg.q);
  } else if (cfg.suite == "congruences") {
    validate(cfg);
    const int lo = cfg.nmax > 0 ? 1 : cfg.n, hi = cfg.nmax > 0 ? cfg.nmax : cfg.n;
    for (int n = lo; n <= hi; ++n)
      for (auto& c : runCongruenceSuite(cfg.q, n)) certs.push_back(c);
  } else if (cfg.suite == "paper") {
    validate(cfg);
    // Default grid per q: n <= 3 for q = 2, n <= 2 for q = 3, n = 1 otherwise.
    const int nmax = cfg.nmax > 0 ? cfg.nmax : (cfg.q == 2 ? 3 : cfg.q == 3 ? 2 : 1);
    std::vector<std::array<int, 3>> levels;
    for (int n = 1; n <= nmax; ++n)
      for (int k = 2; k <= cfg.kmax; ++k) levels.push_back({cfg.q, n, k});
    for (auto& c : runGossSuite(cfg.q, cfg.imax > 0 ? cfg.imax : cfg.q * cfg.q)) certs.push_back(c);
    for (int n = 1; n <= nmax; ++n)
      for (auto& c : runCongruenceSuite(cfg.q, n)) certs.push_back(c);
    for (const auto& L : runLevels(levels, cfg.seed))
      for (const auto& c : L.certs) certs.push_back(c);
  } else {
    throw UsageError("unknown suite '" + cfg.suite + "' (paper, goss, congruences)");
  }
  const bool ok = suiteOk(certs);
  if (cfg.format == "csv") {
    std::string text = "lemma,params,status,witness\n";
    for (const auto& c : certs) {
      std::string p;
      for (const auto& [k, v] : c.params) p += (p.empty() ? "" : ";") + k + "=" + v;
      text += csvEscape(c.lemma) + "," + csvEscape(p) + "," + c.status() + "," + csvEscape(c.witness) + "\n";
    }
    emit(cfg, text);
  } else {
    json items = json::array();
    for (const auto& c : certs) items.push_back(toJson(c));
    emit(cfg, json({{"suite", cfg.suite}, {"ok", ok}, {"items", items}}).dump(2) + "\n");
  }
  return ok ? kOk : kFail;
}

int cmdGraph(const Config& cfg) {
  requireFormat(cfg, {"json", "dot", "csv"});
  QuotientGraph G;
  if (!cfg.import_path.empty()) {
    std::ifstream is(cfg.import_path);
    if (!is) throw UsageError("cannot read " + cfg.import_path);
    try {
      G = graphFromJson(json::parse(is));
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad graph JSON: ") + e.what());
    }
  } else {
    validate(cfg);
    const GroupContext ctx(cfg.q, cfg.n);
    const OrbitEngine eng(ctx);
    const EdgeClassifier cls(eng);
    G = buildQuotientGraph(cls, cfg.depth >= 0 ? cfg.depth : 3);
  }
  if (cfg.format == "dot") {
    emit(cfg, toDot(G));
  } else if (cfg.format == "csv") {
    std::string text = "i,c,d,stab_order,stable,origin,terminus\n";
    for (const auto& e : G.edges)
      text += std::to_string(e.i) + "," + csvEscape(e.c.to_string()) + "," + csvEscape(e.d.to_string()) + "," +
              std::to_string(e.stab_order) + "," + (e.stable ? "true" : "false") + "," + std::to_string(e.origin) + "," +
              std::to_string(e.terminus) + "\n";
    emit(cfg, text);
  } else {
    emit(cfg, toJson(G).dump(2) + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic cocycles and Hecke operators for Gamma_1(t^n) over F_q[t]"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&cfg](CLI::App* s, bool level) {
    s->add_option("--q", cfg.q, "field order (prime power)");
    if (level) {
      s->add_option("--n", cfg.n, "level exponent n (level t^n)");
      s->add_option("--k", cfg.k, "weight");
      s->add_option("--depth", cfg.depth, "truncation depth override");
    }
    s->add_option("--format", cfg.format, "json | csv | dot | latex");
    s->add_option("--out", cfg.out, "output file (default stdout)");
    s->add_option("--seed", cfg.seed, "seed for randomized property checks");
    s->add_option("--max-orbits", cfg.max_orbits, "bound on quotient graph size (also DRINFELD_MAX_ORBITS)");
  };
  auto* dims = app.add_subcommand("dims", "genus, cusps, dim S_k and the computed cocycle dimension");
  common(dims, true);
  auto* hecke = app.add_subcommand("hecke", "operator matrices on the cocycle space");
  common(hecke, true);
  hecke->add_option("--op", cfg.ops, "Ut | Tm:<poly> | Diamond:<poly> (repeatable)");
  hecke->add_flag("--certify", cfg.certify, "check the ordinary-part certificate");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify, true);
  verify->add_option("--suite", cfg.suite, "paper | goss | congruences");
  verify->add_option("--nmax", cfg.nmax, "largest n in the grid");
  verify->add_option("--kmax", cfg.kmax, "largest weight in the grid");
  verify->add_option("--imax", cfg.imax, "largest Goss index");
  auto* graph = app.add_subcommand("graph", "export the quotient graph");
  common(graph, true);
  graph->add_option("--import", cfg.import_path, "re-emit a graph previously exported as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (cfg.max_orbits > 0) setenv("DRINFELD_MAX_ORBITS", std::to_string(cfg.max_orbits).c_str(), 1);
  try {
    if (dims->parsed()) return cmdDims(cfg);
    if (hecke->parsed()) return cmdHecke(cfg);
    if (verify->parsed()) return cmdVerify(cfg);
    if (graph->parsed()) return cmdGraph(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kResource;
  } catch (const DimensionMismatch& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kFail;
  } catch (const DepthInstability& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
