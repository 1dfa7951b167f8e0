#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qmrc {

struct CheckResult {
  std::string description;
  bool ok = false;
};

struct IdentityReport {
  std::string name;
  std::optional<long> range;  // coefficient range for q-expansion checks
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Line-oriented text form:
//   report NAME
//   range N            (when present)
//   check pass|fail DESCRIPTION
//   note TEXT
//   result pass|fail
std::string to_text(const IdentityReport& rep);

// D E2, D E4, D E6 against the generator images, the second derivative of
// E2, and the q-expansion cross-check of all four through q^nmax.
IdentityReport verify_ramanujan(long nmax);

// tau(n) = n^4 sigma(n) - 24 sum_{a<n} (35a^4 - 52a^3 n + 18a^2 n^2)
//          sigma(a) sigma(n-a)  for n <= nmax, plus the differential identity
// behind it.  The bracket-derived form fixes the sign of the Delta multiple;
// the classically displayed opposite sign fails and is reported in a note.
IdentityReport verify_niebur(long nmax);

// tau(n) = n^2 sigma_3(n) + 60 sum a(9a-5n) sigma_3(a) sigma_3(n-a) and the
// companion with (2n-3a)(n-3a), for n <= nmax, plus their differential forms.
IdentityReport verify_vanderpol(long nmax);

// The third-order nonlinear equation satisfied by E2 and its bracket
// counterparts: K = [E2, Delta]_1 = Delta E4, the iterated brackets against
// Delta, and 2 D^3 E2 - 2 E2 D^2 E2 + 3 (D E2)^2 = 0.
IdentityReport verify_chazy();

// Structure of D^r E2 D^{n-r} E2 for n <= nmax, r <= n: membership in
// cusp-derived sums plus the lines D^n E4 and D^{n+1} E2, with the small-n
// special cases.
IdentityReport verify_structure(int nmax);

}  // namespace qmrc
