#include "symred/sym_matrix.hpp"

#include <sstream>
#include <utility>

#include "symred/errors.hpp"

namespace symred {

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DomainError("SymMatrix: rows are not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i]) throw DomainError("SymMatrix: input is not symmetric");
      m.a_[i * m.dim_ + j] = rows[i][j];
    }
  }
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  a_[i * dim_ + j] = v;
  a_[j * dim_ + i] = v;
}

std::vector<std::vector<Rational>> SymMatrix::rows() const {
  std::vector<std::vector<Rational>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i].assign(a_.begin() + i * dim_, a_.begin() + (i + 1) * dim_);
  return out;
}

std::string SymMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

InertiaResult inertia(const SymMatrix& input) {
  const std::size_t n = input.dim();
  // Working copy of the trailing block; w[i][j] for active indices.
  std::vector<std::vector<Rational>> w = input.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  InertiaResult res;
  while (!active.empty()) {
    std::size_t piv = active.size();
    for (std::size_t a = 0; a < active.size(); ++a) {
      if (w[active[a]][active[a]] != 0) {
        piv = a;
        break;
      }
    }
    if (piv == active.size()) {
      // Zero diagonal: look for an off-diagonal entry to fold in.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t a = 0; a < active.size() && !found; ++a) {
        for (std::size_t b = a + 1; b < active.size(); ++b) {
          if (w[active[a]][active[b]] != 0) {
            pi = active[a];
            pj = active[b];
            found = true;
            break;
          }
        }
      }
      if (!found) break;  // remaining block is zero
      // Row/col pi += row/col pj (a congruence).
      for (std::size_t k : active) w[pi][k] += w[pj][k];
      for (std::size_t k : active) w[k][pi] = w[pi][k];
      w[pi][pi] += w[pj][pi];
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (active[a] == pi) piv = a;
      }
      if (w[pi][pi] == 0) throw InternalError("inertia: congruence shift produced a zero pivot");
    }
    const std::size_t p = active[piv];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(piv));
    const Rational d = w[p][p];
    if (d > 0) {
      ++res.positive;
    } else {
      ++res.negative;
    }
    for (std::size_t i : active) {
      if (w[i][p] == 0) continue;
      const Rational f = w[i][p] / d;
      for (std::size_t j : active) w[i][j] -= f * w[p][j];
    }
  }
  res.rank = res.positive + res.negative;
  res.signature = res.positive - res.negative;
  res.zero = static_cast<int>(n) - res.rank;
  return res;
}

}  // namespace symred
