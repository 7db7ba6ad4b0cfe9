#include <map>
#include <numeric>

#include "ggpint/oracle.hpp"

namespace ggpint {

FpMatrix JordanData::full() const {
    FpMatrix m(p, size_t(d), size_t(d));
    for (int i = 0; i + 1 < d; ++i)
        for (int j = 0; j + 1 < d; ++j) m.set(size_t(i), size_t(j), h1.at(size_t(i), size_t(j)));
    for (int i = 0; i + 1 < d; ++i) m.set(size_t(i), size_t(d - 1), h2[size_t(i)]);
    m.set(size_t(d - 1), size_t(d - 1), h4);
    return m;
}

int JordanData::block_size_c() const {
    // Multiplicity of (T - h4) in the characteristic polynomial of the
    // full matrix; with min = char this is the unique lambda-block size.
    FpPoly chi = matrix_char_poly(full());
    const FpPoly lin = FpPoly(p, {fp_neg(h4, p), 1});
    int c = 0;
    while (lin.divides(chi)) {
        chi = chi / lin;
        ++c;
    }
    return c;
}

void JordanData::validate() const {
    if (d < 1) throw ValidationError("JordanShape", "d must be >= 1");
    if (h1.rows() != size_t(d - 1) || h1.cols() != size_t(d - 1) || h2.size() != size_t(d - 1))
        throw ValidationError("JordanShape", "H1/H2 dimensions do not match d");
    const FpMatrix m = full();
    if (matrix_min_poly(m) != matrix_char_poly(m))
        throw ValidationError("JordanShape",
                              "full matrix must have one Jordan block per eigenvalue");
    const int c = block_size_c();
    if (c >= 2 && fp_norm(h2[size_t(d - 2)], p) == 0)
        throw ValidationError("JordanShape", "H2 entry adjacent to the lambda block is zero");
}

namespace {

/// Monomials in v variables of total degree < cap, in a deterministic
/// (graded-lexicographic) order, with an index lookup.
struct MonomialTable {
    std::vector<std::vector<int>> monomials;
    std::map<std::vector<int>, size_t> index;

    MonomialTable(int vars, int cap) {
        std::vector<int> cur(size_t(vars), 0);
        for (int deg = 0; deg < cap; ++deg) emit(cur, 0, deg);
    }
    void emit(std::vector<int>& cur, size_t pos, int remaining) {
        if (pos + 1 == cur.size() || cur.empty()) {
            if (!cur.empty()) cur[pos] = remaining;
            if (cur.empty() && remaining > 0) return;
            index[cur] = monomials.size();
            monomials.push_back(cur);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur[pos] = k;
            emit(cur, pos + 1, remaining - k);
        }
        cur[pos] = 0;
    }
};

/// Sparse polynomial: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, int64_t>;

}  // namespace

long local_ring_length(const JordanData& jd) {
    jd.validate();
    const int64_t p = jd.p;
    const int vars = jd.d - 1;

    // The defining equations: for each j, sum_i r_i H1[i][j]
    // + (r.H2) r_j - H4 r_j.
    std::vector<Poly> gens;
    for (int j = 0; j < vars; ++j) {
        Poly f;
        auto add = [&](std::vector<int> expo, int64_t c) {
            c = fp_norm(c, p);
            if (c == 0) return;
            auto [it, fresh] = f.emplace(std::move(expo), c);
            if (!fresh) {
                it->second = fp_add(it->second, c, p);
                if (it->second == 0) f.erase(it);
            }
        };
        for (int i = 0; i < vars; ++i) {
            std::vector<int> e(size_t(vars), 0);
            e[size_t(i)] = 1;
            add(std::move(e), jd.h1.at(size_t(i), size_t(j)));
        }
        for (int i = 0; i < vars; ++i) {
            std::vector<int> e(size_t(vars), 0);
            e[size_t(i)] += 1;
            e[size_t(j)] += 1;
            add(std::move(e), jd.h2[size_t(i)]);
        }
        std::vector<int> e(size_t(vars), 0);
        e[size_t(j)] = 1;
        add(std::move(e), fp_neg(jd.h4, p));
        gens.push_back(std::move(f));
    }

    const int cap = jd.d + 4;
    long prev = -1;
    for (int trunc = 1; trunc <= cap; ++trunc) {
        MonomialTable table(vars, trunc);
        const size_t ncols = table.monomials.size();
        // Relations mu * f truncated below degree `trunc`.
        std::vector<int64_t> rows;
        size_t nrows = 0;
        for (const auto& mu : table.monomials) {
            const int mu_deg = std::accumulate(mu.begin(), mu.end(), 0);
            if (mu_deg + 1 >= trunc) continue;  // every term would be cut
            for (const auto& f : gens) {
                std::vector<int64_t> row(ncols, 0);
                bool any = false;
                for (const auto& [expo, coef] : f) {
                    std::vector<int> e(mu);
                    int deg = mu_deg;
                    for (size_t i = 0; i < e.size(); ++i) {
                        e[i] += expo[i];
                        deg += expo[i];
                    }
                    if (deg >= trunc) continue;
                    row[table.index.at(e)] = fp_add(row[table.index.at(e)], coef, p);
                    any = true;
                }
                if (!any) continue;
                rows.insert(rows.end(), row.begin(), row.end());
                ++nrows;
            }
        }
        long length;
        if (nrows == 0) {
            length = long(ncols);
        } else {
            FpMatrix rel(p, nrows, ncols, std::move(rows));
            length = long(ncols) - long(rel.rank());
        }
        if (length == prev) return length;
        prev = length;
    }
    throw not_stabilized("truncated length did not stabilize below the cap; the local ring "
                         "is not finite");
}

JordanData gen_jordan(int c, int d, int64_t p, uint64_t seed) {
    require_odd_prime(p);
    if (c < 1 || d < 1 || c > d)
        throw infeasible_shape("need 1 <= c <= d");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> any(0, p - 1);
    std::uniform_int_distribution<int64_t> unit(1, p - 1);

    const int64_t lambda = any(rng);
    const int rest = (d - 1) - (c - 1);  // dims to fill with non-lambda blocks

    // Random composition of `rest` into at most p - 1 parts with distinct
    // eigenvalues different from lambda.
    std::vector<int> sizes;
    {
        int left = rest;
        while (left > 0) {
            if (int(sizes.size()) + 1 == int(p)) {  // only p - 1 eigenvalues available
                sizes.push_back(left);
                left = 0;
                break;
            }
            std::uniform_int_distribution<int> part(1, left);
            const int s = part(rng);
            sizes.push_back(s);
            left -= s;
        }
        if (int(sizes.size()) > int(p) - 1)
            throw infeasible_shape("not enough distinct eigenvalues for the blocks");
    }
    std::vector<int64_t> eigens;
    for (size_t i = 0; i < sizes.size(); ++i) {
        for (int tries = 0;; ++tries) {
            if (tries > 1024) throw infeasible_shape("eigenvalue sampling stuck");
            const int64_t e = any(rng);
            if (e == lambda) continue;
            if (std::find(eigens.begin(), eigens.end(), e) != eigens.end()) continue;
            eigens.push_back(e);
            break;
        }
    }

    JordanData jd;
    jd.p = p;
    jd.d = d;
    jd.h1 = FpMatrix(p, size_t(d - 1), size_t(d - 1));
    jd.h2.assign(size_t(d - 1), 0);
    jd.h4 = lambda;
    size_t pos = 0;
    for (size_t b = 0; b < sizes.size(); ++b)
        for (int i = 0; i < sizes[b]; ++i, ++pos) {
            jd.h1.set(pos, pos, eigens[b]);
            if (i + 1 < sizes[b]) jd.h1.set(pos, pos + 1, 1);
        }
    for (int i = 0; i < c - 1; ++i, ++pos) {
        jd.h1.set(pos, pos, lambda);
        if (i + 1 < c - 1) jd.h1.set(pos, pos + 1, 1);
    }
    for (auto& h : jd.h2) h = any(rng);
    if (c >= 2) jd.h2[size_t(d - 2)] = unit(rng);

    jd.validate();
    if (jd.block_size_c() != c)
        throw InternalError("JordanBlockSize", "generated lambda-block has the wrong size");
    return jd;
}

}  // namespace ggpint
