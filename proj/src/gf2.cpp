#include "gsat/gf2.hpp"

#include <algorithm>

namespace gsat {

std::optional<std::vector<uint8_t>> gauss_solve(const AffineSystem& sys) {
    struct Row {
        Bitvec s;
        int p;
    };
    std::vector<Row> rows;
    std::vector<int> pivot_of_row;
    for (const auto& eq : sys.eqs) {
        Row r{eq.support, eq.parity};
        for (size_t i = 0; i < rows.size(); ++i)
            if (pivot_of_row[i] >= 0 && r.s.get(pivot_of_row[i])) {
                r.s ^= rows[i].s;
                r.p ^= rows[i].p;
            }
        if (!r.s.any()) {
            if (r.p) return std::nullopt;
            continue;
        }
        pivot_of_row.push_back(r.s.lowest());
        rows.push_back(std::move(r));
    }
    std::vector<uint8_t> x(sys.nvars, 0);
    // back-substitute in decreasing pivot order; free variables stay 0
    std::vector<size_t> order(rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivot_of_row[a] > pivot_of_row[b]; });
    for (size_t i : order) {
        int v = rows[i].p;
        int piv = pivot_of_row[i];
        for (int j = piv + 1; j < sys.nvars; ++j)
            if (rows[i].s.get(j)) v ^= x[j];
        x[piv] = uint8_t(v);
    }
    return x;
}

void BoolRelation::insert(uint32_t t) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) tuples.insert(it, t);
}

bool BoolRelation::contains(uint32_t t) const {
    return std::binary_search(tuples.begin(), tuples.end(), t);
}

namespace {

// Row basis over uint32 masks; returns rank.
struct MaskBasis {
    std::vector<uint32_t> rows;  // echelon, one row per pivot

    // reduces m by the basis; returns the residue
    uint32_t reduce(uint32_t m) const {
        for (uint32_t r : rows)
            if (m & (r & -r)) m ^= r;  // rows kept with distinct lowest bits
        return m;
    }
    bool add(uint32_t m) {
        m = reduce(m);
        if (!m) return false;
        rows.push_back(m);
        // keep rows ordered by lowest set bit so reduce() terminates
        std::sort(rows.begin(), rows.end(),
                  [](uint32_t a, uint32_t b) { return (a & -a) < (b & -b); });
        return true;
    }
};

// Kernel basis of the space spanned by the given vectors in GF(2)^w:
// all masks orthogonal to every vector.
std::vector<uint32_t> kernel_basis(const std::vector<uint32_t>& vecs, int w) {
    // reduced row echelon form, row with pivot (= highest) bit b at byhi[b]
    std::vector<uint32_t> byhi(w, 0);
    for (uint32_t v : vecs) {
        for (int b = w - 1; b >= 0 && v; --b) {
            if (!(v >> b & 1)) continue;
            if (byhi[b]) {
                v ^= byhi[b];
            } else {
                byhi[b] = v;
                break;
            }
        }
    }
    for (int b = 0; b < w; ++b) {
        if (!byhi[b]) continue;
        for (int c = b + 1; c < w; ++c)
            if (byhi[c] && (byhi[c] >> b & 1)) byhi[c] ^= byhi[b];
    }
    std::vector<uint32_t> kernel;
    for (int f = 0; f < w; ++f) {
        if (byhi[f]) continue;  // pivot column
        uint32_t v = 1u << f;
        for (int c = 0; c < w; ++c)
            if (byhi[c] && (byhi[c] >> f & 1)) v |= 1u << c;
        kernel.push_back(v);
    }
    return kernel;
}

} // namespace

AffineSystem affine_basis(const BoolRelation& S) {
    if (S.tuples.empty())
        throw parse_error("affine_basis: relation must be nonempty");
    int w = S.width;
    uint32_t s0 = S.tuples[0];
    std::vector<uint32_t> diffs;
    for (uint32_t t : S.tuples) diffs.push_back(t ^ s0);
    std::vector<uint32_t> kernel = kernel_basis(diffs, w);

    if (kernel.size() > 22)
        throw resource_guard_error("affine_basis: dual space too large to enumerate");
    std::vector<uint32_t> dual;
    dual.reserve(1u << kernel.size());
    dual.push_back(0);
    for (uint32_t kb : kernel) {
        size_t n = dual.size();
        for (size_t i = 0; i < n; ++i) dual.push_back(dual[i] ^ kb);
    }
    std::sort(dual.begin(), dual.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    AffineSystem sys;
    sys.nvars = w;
    MaskBasis chosen;
    for (uint32_t m : dual) {
        if (!m) continue;
        if (!chosen.add(m)) continue;
        AffineSystem::Equation eq;
        eq.support = Bitvec(w);
        for (int i = 0; i < w; ++i)
            if (m >> i & 1) eq.support.set(i);
        eq.parity = __builtin_popcount(m & s0) & 1;
        sys.eqs.push_back(std::move(eq));
    }
    return sys;
}

bool closed_under_bool_minority(const BoolRelation& S) {
    if (S.tuples.empty()) return true;
    // minority-closed iff S is an affine coset: |S| = 2^rank(differences)
    MaskBasis basis;
    uint32_t s0 = S.tuples[0];
    for (uint32_t t : S.tuples) basis.add(t ^ s0);
    return S.tuples.size() == size_t(1) << basis.rows.size();
}

bool closed_under_bool_majority(const BoolRelation& S) {
    size_t n = S.tuples.size();
    if (n == 0) return true;
    int w = S.width;
    if (w <= 1) return true;  // the vote is always one of the inputs
    if (n * n * n <= 8000000) {
        for (uint32_t a : S.tuples)
            for (uint32_t b : S.tuples)
                for (uint32_t c : S.tuples) {
                    uint32_t maj = (a & b) | (a & c) | (b & c);
                    if (!S.contains(maj)) return false;
                }
        return true;
    }
    // majority-closed iff determined by its pair projections
    if (w > 22)
        throw resource_guard_error("closed_under_bool_majority: width too large");
    std::vector<uint8_t> proj(size_t(w) * w, 0);  // 4-bit sets per ordered pair
    for (uint32_t t : S.tuples)
        for (int i = 0; i < w; ++i)
            for (int j = i + 1; j < w; ++j)
                proj[size_t(i) * w + j] |= uint8_t(1u << ((t >> i & 1) | ((t >> j & 1) << 1)));
    size_t count = 0;
    for (uint32_t t = 0; t < (1u << w); ++t) {
        bool ok = true;
        for (int i = 0; i < w && ok; ++i)
            for (int j = i + 1; j < w; ++j)
                if (!(proj[size_t(i) * w + j] >> ((t >> i & 1) | ((t >> j & 1) << 1)) & 1)) {
                    ok = false;
                    break;
                }
        if (ok && ++count > n) return false;
    }
    return count == n;
}

} // namespace gsat
