#include "kch/augment/augment.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

namespace kch {

AugSystem aug_system(const DGA &d, std::optional<LetterKind> drop) {
    if (d.ring->mode != AlgebraMode::Commuted)
        throw DomainError("augmentation systems need a commuted DGA");
    AugSystem sys;
    sys.vars = d.ring->vars;
    sys.units = static_cast<int>(sys.vars.size());
    sys.chords = d.generators_of_degree(0);
    for (const Letter &l : sys.chords)
        sys.vars.push_back(letter_name(l));
    std::set<CommPoly, bool (*)(const CommPoly &, const CommPoly &)> seen(
        [](const CommPoly &a, const CommPoly &b) { return a.terms() < b.terms(); });
    for (const Letter &g : d.generators_of_degree(1)) {
        if (drop && g.kind == *drop)
            continue;
        CommPoly e = abelianize(d.d(g), sys.vars);
        if (e.is_zero() || !seen.insert(e).second)
            continue;
        sys.equations.push_back(std::move(e));
    }
    return sys;
}

namespace {

struct CTerm {
    int64_t c;
    std::vector<std::pair<int, int>> factors; // (variable, exponent >= 1)
};
using CEquation = std::vector<CTerm>;

class Search {
  public:
    Search(const AugSystem &sys, const SearchOptions &opt) : p_(opt.prime), n_(sys.vars.size()) {
        if (p_ != 2 && p_ != 3 && p_ != 5 && p_ != 7)
            throw DomainError("augmentation search supports the primes 2, 3, 5, 7");
        int nchords = static_cast<int>(n_) - sys.units;
        if (nchords > opt.max_chord_vars)
            throw ResourceLimit("augmentation system has " + std::to_string(nchords) +
                                " degree-0 generators, above the cap of " +
                                std::to_string(opt.max_chord_vars));
        parallel_ = opt.parallel;
        unit_.assign(n_, false);
        for (int v = 0; v < sys.units; ++v)
            unit_[v] = true;

        std::vector<int> membership(n_, 0);
        for (const CommPoly &e : sys.equations)
            for (size_t v = 0; v < n_; ++v)
                if (e.mentions(static_cast<int>(v)))
                    ++membership[v];
        for (int v = 0; v < sys.units; ++v)
            order_.push_back(v);
        std::vector<int> chords;
        for (size_t v = sys.units; v < n_; ++v)
            chords.push_back(static_cast<int>(v));
        std::stable_sort(chords.begin(), chords.end(),
                         [&](int a, int b) { return membership[a] > membership[b]; });
        order_.insert(order_.end(), chords.begin(), chords.end());
        std::vector<int> pos(n_);
        for (size_t k = 0; k < n_; ++k)
            pos[order_[k]] = static_cast<int>(k);

        at_.assign(n_, {});
        for (const CommPoly &e : sys.equations) {
            CEquation ce;
            int last = -1;
            for (const auto &[ex, c] : e.terms()) {
                CTerm t{mod_p(c, p_), {}};
                if (t.c == 0)
                    continue;
                for (size_t v = 0; v < n_; ++v) {
                    int x = ex[v];
                    if (x == 0)
                        continue;
                    if (unit_[v]) {
                        x = ((x % (p_ - 1)) + (p_ - 1)) % (p_ - 1);
                        if (x == 0)
                            continue;
                    } else {
                        if (x < 0)
                            throw InternalError("negative power of a degree-0 generator");
                        x = (x - 1) % (p_ - 1) + 1;
                    }
                    t.factors.emplace_back(static_cast<int>(v), x);
                    last = std::max(last, pos[v]);
                }
                ce.push_back(std::move(t));
            }
            if (ce.empty())
                continue;
            if (last < 0) {
                int64_t s = 0;
                for (const CTerm &t : ce)
                    s += t.c;
                if (s % p_ != 0)
                    inconsistent_ = true;
                continue;
            }
            // All-constant terms are folded into the equation at position `last`.
            at_[last].push_back(std::move(ce));
            last_eq_ = std::max(last_eq_, last);
        }
    }

    uint64_t count() {
        if (inconsistent_)
            return 0;
        std::vector<int64_t> val(n_, 0);
        if (n_ == 0)
            return 1;
        return branch(val, [&](std::vector<int64_t> &v, int64_t x) {
            v[order_[0]] = x;
            return count_from(1, v);
        });
    }

    std::vector<std::vector<int64_t>> enumerate() {
        std::vector<std::vector<int64_t>> out;
        if (inconsistent_)
            return out;
        std::vector<int64_t> val(n_, 0);
        if (n_ == 0) {
            out.push_back(val);
            return out;
        }
        auto parts = branch_collect(val);
        for (auto &part : parts)
            for (auto &s : part)
                out.push_back(std::move(s));
        return out;
    }

  private:
    std::vector<int64_t> domain(int v) const {
        std::vector<int64_t> d;
        for (int64_t x = unit_[v] ? 1 : 0; x < p_; ++x)
            d.push_back(x);
        return d;
    }

    bool satisfied(int k, const std::vector<int64_t> &val) const {
        for (const CEquation &e : at_[k]) {
            int64_t s = 0;
            for (const CTerm &t : e) {
                int64_t m = t.c;
                for (const auto &[v, x] : t.factors) {
                    m = m * pow_mod(val[v], x, p_) % p_;
                    if (m == 0)
                        break;
                }
                s += m;
            }
            if (s % p_ != 0)
                return false;
        }
        return true;
    }

    uint64_t count_from(size_t k, std::vector<int64_t> &val) const {
        if (!satisfied(static_cast<int>(k) - 1, val))
            return 0;
        if (static_cast<int>(k) > last_eq_) {
            uint64_t free = 1;
            for (size_t j = k; j < n_; ++j)
                free *= static_cast<uint64_t>(unit_[order_[j]] ? p_ - 1 : p_);
            return free;
        }
        uint64_t total = 0;
        int v = order_[k];
        for (int64_t x : domain(v)) {
            val[v] = x;
            total += count_from(k + 1, val);
        }
        return total;
    }

    void collect_from(size_t k, std::vector<int64_t> &val,
                      std::vector<std::vector<int64_t>> &out) const {
        if (!satisfied(static_cast<int>(k) - 1, val))
            return;
        if (k == n_) {
            out.push_back(val);
            return;
        }
        int v = order_[k];
        for (int64_t x : domain(v)) {
            val[v] = x;
            collect_from(k + 1, val, out);
        }
    }

    template <class F> uint64_t branch(const std::vector<int64_t> &val, F f) {
        auto dom = domain(order_[0]);
        std::vector<std::future<uint64_t>> jobs;
        uint64_t total = 0;
        for (int64_t x : dom) {
            auto job = [=, this]() mutable {
                std::vector<int64_t> v = val;
                return f(v, x);
            };
            if (parallel_)
                jobs.push_back(std::async(std::launch::async, job));
            else
                total += job();
        }
        for (auto &j : jobs)
            total += j.get();
        return total;
    }

    std::vector<std::vector<std::vector<int64_t>>> branch_collect(const std::vector<int64_t> &val) {
        auto dom = domain(order_[0]);
        std::vector<std::vector<std::vector<int64_t>>> parts(dom.size());
        std::vector<std::future<void>> jobs;
        for (size_t i = 0; i < dom.size(); ++i) {
            auto job = [&, i]() {
                std::vector<int64_t> v = val;
                v[order_[0]] = dom[i];
                collect_from(1, v, parts[i]);
            };
            if (parallel_)
                jobs.push_back(std::async(std::launch::async, job));
            else
                job();
        }
        for (auto &j : jobs)
            j.get();
        return parts;
    }

    int64_t p_;
    size_t n_;
    bool parallel_ = true;
    bool inconsistent_ = false;
    int last_eq_ = -1;
    std::vector<bool> unit_;
    std::vector<int> order_;
    std::vector<std::vector<CEquation>> at_;
};

} // namespace

uint64_t count_solutions(const AugSystem &sys, const SearchOptions &opt) {
    return Search(sys, opt).count();
}

AugSolutions enumerate_solutions(const AugSystem &sys, const SearchOptions &opt) {
    AugSolutions out{sys.vars, sys.units, Search(sys, opt).enumerate()};
    std::sort(out.points.begin(), out.points.end());
    return out;
}

uint64_t count_augmentations(const DGA &d, const SearchOptions &opt) {
    return count_solutions(aug_system(d), opt);
}

AugSolutions enumerate_augmentations(const DGA &d, const SearchOptions &opt) {
    return enumerate_solutions(aug_system(d), opt);
}

uint64_t transverse_augmentation_number(const BraidWord &b, const SearchOptions &opt) {
    if (components(b).r != 1)
        throw DomainError("transverse augmentation numbers need a knot closure");
    return count_augmentations(build_dga(b, {DgaVariant::Hat, AlgebraMode::Commuted, {}}), opt);
}

} // namespace kch
