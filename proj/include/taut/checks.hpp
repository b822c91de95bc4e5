#pragma once

#include <string>
#include <vector>

#include "taut/blowup_ring.hpp"

namespace taut {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckLine> lines;

  void add(std::string name, bool ok, std::string detail = {}) {
    lines.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const CheckReport& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
  bool passed() const;
};

/// T^2 = (-1)^m (m+1)! T, rank = Catalan(m), kernel spanned by the
/// three-term multiples; m = 2 also checks the explicit matrix.
CheckReport check_tmatrix(int m);

/// Brute-force dimensions against pairing ranks in every degree.
CheckReport check_oracle(int n);

/// verify_gorenstein plus dim R^1 = 2^n - n - 1.
CheckReport check_gorenstein(int n, PairingMode mode, int jobs = 1);

/// The Getzler pullback checks at four and five markings.
CheckReport check_getzler();

/// Closed-form lambda integrals and epsilon on all psi monomials, n <= max_n.
CheckReport check_lambda(int max_n);

}  // namespace taut
