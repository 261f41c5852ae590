#include "kch/ncalg/ncmatrix.hpp"
#include "kch/errors.hpp"

#include <ostream>
#include <string>

namespace kch {

NCMatrix::NCMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw DomainError("negative matrix dimension");
    entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), NCPoly(ring_));
}

NCMatrix NCMatrix::identity(RingPtr ring, int n) {
    NCMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = NCPoly::constant(ring, 1);
    return m;
}

NCMatrix NCMatrix::diagonal(const std::vector<NCPoly> &entries) {
    if (entries.empty())
        throw DomainError("empty diagonal");
    int n = static_cast<int>(entries.size());
    NCMatrix m(entries[0].ring(), n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = entries[i];
    return m;
}

const NCPoly &NCMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DomainError("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range");
    return entries_[static_cast<size_t>(i) * cols_ + j];
}

NCPoly &NCMatrix::at(int i, int j) {
    return const_cast<NCPoly &>(static_cast<const NCMatrix &>(*this).at(i, j));
}

bool NCMatrix::operator==(const NCMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::ostream &operator<<(std::ostream &os, const NCMatrix &m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "") << "[";
        for (int j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m.at(i, j);
        os << "]";
    }
    return os << "]";
}

namespace {

void check_shape(const NCMatrix &m, const NCMatrix &n) {
    if (m.rows() != n.rows() || m.cols() != n.cols())
        throw DomainError("matrix dimension mismatch");
}

} // namespace

NCMatrix mat_mul(const NCMatrix &m, const NCMatrix &n) {
    if (m.cols() != n.rows())
        throw DomainError("matrix dimension mismatch in product");
    NCMatrix r(m.ring(), m.rows(), n.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n.cols(); ++j) {
            NCPolyBuilder b(m.ring());
            for (int k = 0; k < m.cols(); ++k) {
                const NCPoly &x = m.at(i, k);
                const NCPoly &y = n.at(k, j);
                if (!x.is_zero() && !y.is_zero())
                    b.add(nc_mul(x, y));
            }
            r.at(i, j) = std::move(b).build();
        }
    return r;
}

NCMatrix mat_add(const NCMatrix &m, const NCMatrix &n) {
    check_shape(m, n);
    NCMatrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) += n.at(i, j);
    return r;
}

NCMatrix mat_sub(const NCMatrix &m, const NCMatrix &n) {
    check_shape(m, n);
    NCMatrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) -= n.at(i, j);
    return r;
}

NCMatrix mat_conj_diag(const NCMatrix &m, const std::vector<NCPoly> &l_diag) {
    if (static_cast<int>(l_diag.size()) != m.rows() || m.rows() != m.cols())
        throw DomainError("matrix dimension mismatch in conjugation");
    std::vector<NCPoly> inv;
    inv.reserve(l_diag.size());
    for (const NCPoly &l : l_diag) {
        auto li = l.unit_inverse();
        if (!li)
            throw DomainError("conjugation by a non-invertible diagonal entry " + l.to_string());
        inv.push_back(*li);
    }
    NCMatrix r(m.ring(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                r.at(i, j) = nc_mul(nc_mul(l_diag[i], m.at(i, j)), inv[j]);
    return r;
}

} // namespace kch
