#pragma once

#include "kch/ncalg/ncpoly.hpp"

#include <iosfwd>
#include <vector>

namespace kch {

class NCMatrix {
  public:
    NCMatrix(RingPtr ring, int rows, int cols);

    static NCMatrix identity(RingPtr ring, int n);
    static NCMatrix diagonal(const std::vector<NCPoly> &entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingPtr &ring() const { return ring_; }

    // Zero-based, bounds-checked.
    const NCPoly &at(int i, int j) const;
    NCPoly &at(int i, int j);

    bool operator==(const NCMatrix &o) const;

  private:
    RingPtr ring_;
    int rows_, cols_;
    std::vector<NCPoly> entries_;
};

std::ostream &operator<<(std::ostream &os, const NCMatrix &m);

NCMatrix mat_mul(const NCMatrix &m, const NCMatrix &n);
NCMatrix mat_add(const NCMatrix &m, const NCMatrix &n);
NCMatrix mat_sub(const NCMatrix &m, const NCMatrix &n);

/// L * M * L^{-1} for a diagonal matrix L with unit entries.
NCMatrix mat_conj_diag(const NCMatrix &m, const std::vector<NCPoly> &l_diag);

/// Applies `f` to every entry.
template <class F> NCMatrix mat_map(const NCMatrix &m, F &&f) {
    NCMatrix r(m.ring(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = f(m.at(i, j));
    return r;
}

} // namespace kch
