#ifndef DRINFELD_REPORT_HPP
#define DRINFELD_REPORT_HPP

// Pass/fail records produced by the verification routines.

#include <map>
#include <string>
#include <vector>

namespace drinfeld {

struct Certificate {
  std::string lemma;
  std::map<std::string, std::string> params;
  bool ok = true;
  std::string witness;  // first failing case, or a summary on success

  std::string status() const { return ok ? "pass" : "fail"; }
  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
};

inline bool allOk(const std::vector<Certificate>& cs) {
  for (const auto& c : cs)
    if (!c.ok) return false;
  return true;
}

}  // namespace drinfeld

#endif  // DRINFELD_REPORT_HPP
