#pragma once

// Brute-force reference computations on power-set lattices. Everything here
// works straight from the definitions on plain integers and shares no code
// with the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Lattice {
    unsigned n = 0;
    unsigned size = 0;
    std::vector<std::pair<unsigned, unsigned>> rels; // lexicographic

    explicit Lattice(unsigned gens) : n(gens), size(1u << gens)
    {
        for (unsigned a = 0; a < size; ++a) {
            for (unsigned b = 0; b < size; ++b) {
                if (leq(a, b)) {
                    rels.emplace_back(a, b);
                }
            }
        }
    }

    static bool leq(unsigned a, unsigned b) { return (a & ~b) == 0; }

    [[nodiscard]] std::size_t index(unsigned a, unsigned b) const
    {
        return static_cast<std::size_t>(
            std::lower_bound(rels.begin(), rels.end(), std::pair{a, b}) - rels.begin());
    }
};

using Class = std::vector<bool>;

// Square i -> p exists iff i.src <= p.src and i.dst <= p.dst; a lift needs i.dst <= p.src.
inline bool lifts(std::pair<unsigned, unsigned> i, std::pair<unsigned, unsigned> p)
{
    const bool square = Lattice::leq(i.first, p.first) && Lattice::leq(i.second, p.second);
    return !square || Lattice::leq(i.second, p.first);
}

inline Class right_of(const Lattice& P, const Class& L)
{
    Class R(P.rels.size());
    for (std::size_t p = 0; p < P.rels.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i < P.rels.size() && ok; ++i) {
            ok = !L[i] || lifts(P.rels[i], P.rels[p]);
        }
        R[p] = ok;
    }
    return R;
}

inline Class left_of(const Lattice& P, const Class& R)
{
    Class L(P.rels.size());
    for (std::size_t i = 0; i < P.rels.size(); ++i) {
        bool ok = true;
        for (std::size_t p = 0; p < P.rels.size() && ok; ++p) {
            ok = !R[p] || lifts(P.rels[i], P.rels[p]);
        }
        L[i] = ok;
    }
    return L;
}

inline bool factors(const Lattice& P, const Class& L, const Class& R)
{
    for (const auto& [x, y] : P.rels) {
        bool found = false;
        for (unsigned m = 0; m < P.size && !found; ++m) {
            found = Lattice::leq(x, m) && Lattice::leq(m, y) && L[P.index(x, m)] &&
                    R[P.index(m, y)];
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

// Left classes of all factorization systems, found by trying every subset of
// Rels. Feasible for n <= 2.
inline std::vector<Class> factorization_systems(const Lattice& P)
{
    std::vector<Class> out;
    const std::size_t m = P.rels.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        Class L(m);
        for (std::size_t i = 0; i < m; ++i) {
            L[i] = (bits >> i) & 1u;
        }
        const auto R = right_of(P, L);
        if (left_of(P, R) == L && factors(P, L, R)) {
            out.push_back(L);
        }
    }
    return out;
}

struct Model {
    Class cof;
    Class we;
    Class fib;
};

// Model structures as pairs of factorization systems whose acyclic parts
// match the composite class of weak equivalences.
inline std::vector<Model> model_structures(const Lattice& P)
{
    const auto systems = factorization_systems(P);
    const std::size_t m = P.rels.size();
    std::vector<Model> out;
    for (const auto& acof : systems) {
        const auto fib = right_of(P, acof);
        for (const auto& cof : systems) {
            const auto afib = right_of(P, cof);
            Class we(m);
            for (std::size_t r = 0; r < m; ++r) {
                const auto [x, z] = P.rels[r];
                for (unsigned y = 0; y < P.size && !we[r]; ++y) {
                    we[r] = Lattice::leq(x, y) && Lattice::leq(y, z) && acof[P.index(x, y)] &&
                            afib[P.index(y, z)];
                }
            }
            bool ok = true;
            for (std::size_t r = 0; r < m && ok; ++r) {
                ok = acof[r] == (cof[r] && we[r]) && afib[r] == (fib[r] && we[r]);
            }
            for (const auto& [x, z] : P.rels) {
                for (unsigned y = 0; y < P.size && ok; ++y) {
                    if (Lattice::leq(x, y) && Lattice::leq(y, z)) {
                        const int c = we[P.index(x, y)] + we[P.index(y, z)] + we[P.index(x, z)];
                        ok = c != 2;
                    }
                }
            }
            if (ok) {
                out.push_back({cof, we, fib});
            }
        }
    }
    return out;
}

using Table = std::vector<unsigned>;

// Every extensive, monotone, idempotent self-map (or the dual). n <= 3.
inline std::vector<Table> operators(const Lattice& P, bool closure)
{
    std::vector<Table> out;
    Table t(P.size, 0);
    for (unsigned x = 0; x < P.size; ++x) {
        t[x] = closure ? x : 0;
    }
    const auto valid = [&]() {
        for (unsigned x = 0; x < P.size; ++x) {
            if (closure ? !Lattice::leq(x, t[x]) : !Lattice::leq(t[x], x)) {
                return false;
            }
            if (t[t[x]] != t[x]) {
                return false;
            }
            for (unsigned y = 0; y < P.size; ++y) {
                if (Lattice::leq(x, y) && !Lattice::leq(t[x], t[y])) {
                    return false;
                }
            }
        }
        return true;
    };
    // Odometer over all functions, restricted to the up- or down-set of each x.
    while (true) {
        if (valid()) {
            out.push_back(t);
        }
        unsigned x = 0;
        while (x < P.size) {
            unsigned v = t[x] + 1;
            while (v < P.size && !(closure ? Lattice::leq(x, v) : Lattice::leq(v, x))) {
                ++v;
            }
            if (v < P.size) {
                t[x] = v;
                break;
            }
            t[x] = closure ? x : 0;
            ++x;
        }
        if (x == P.size) {
            break;
        }
    }
    return out;
}

inline std::vector<Table> closure_operators(const Lattice& P)
{
    return operators(P, true);
}

inline std::vector<Table> interior_operators(const Lattice& P)
{
    return operators(P, false);
}

inline bool compatible(const Lattice& P, const Table& F, const Table& C)
{
    for (unsigned x = 0; x < P.size; ++x) {
        if (F[C[x]] != C[F[x]]) {
            return false;
        }
        for (unsigned y = 0; y < P.size; ++y) {
            if (Lattice::leq(x, C[y]) && Lattice::leq(F[x], y) && !Lattice::leq(F[x], C[y])) {
                return false;
            }
        }
    }
    return true;
}

inline bool strongly_compatible(const Lattice& P, const Table& F, const Table& C)
{
    if (!compatible(P, F, C)) {
        return false;
    }
    for (const auto& [x, y] : P.rels) {
        if (x != y && F[x] == F[y] && C[x] == C[y]) {
            return false;
        }
    }
    return true;
}

inline bool orthogonal(const Lattice& P, const Table& F, const Table& C)
{
    if (!compatible(P, F, C)) {
        return false;
    }
    for (const auto& f : P.rels) {
        if (F[f.first] != F[f.second]) {
            continue;
        }
        for (const auto& g : P.rels) {
            if (C[g.first] == C[g.second] && !lifts(f, g)) {
                return false;
            }
        }
    }
    return true;
}

// Moore families on an n-set as bit sets over the 2^n subsets. n <= 4.
inline std::vector<std::uint64_t> moore_families(unsigned n)
{
    const unsigned size = 1u << n;
    const unsigned top = size - 1;
    std::vector<std::uint64_t> out;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << size); ++fam) {
        if (!((fam >> top) & 1u)) {
            continue;
        }
        bool ok = true;
        for (unsigned a = 0; a < size && ok; ++a) {
            for (unsigned b = 0; b < size && ok; ++b) {
                if (((fam >> a) & 1u) && ((fam >> b) & 1u)) {
                    ok = (fam >> (a & b)) & 1u;
                }
            }
        }
        if (ok) {
            out.push_back(fam);
        }
    }
    return out;
}

inline bool topology(unsigned n, std::uint64_t fam)
{
    const unsigned size = 1u << n;
    if (!(fam & 1u)) {
        return false;
    }
    for (unsigned a = 0; a < size; ++a) {
        for (unsigned b = 0; b < size; ++b) {
            if (((fam >> a) & 1u) && ((fam >> b) & 1u) && !((fam >> (a | b)) & 1u)) {
                return false;
            }
        }
    }
    return true;
}

inline unsigned close(unsigned n, std::uint64_t fam, unsigned x)
{
    unsigned best = (1u << n) - 1;
    for (unsigned s = 0; s < (1u << n); ++s) {
        if (((fam >> s) & 1u) && (x & ~s) == 0) {
            best &= s;
        }
    }
    return best;
}

inline bool matroid(unsigned n, std::uint64_t fam)
{
    for (unsigned a = 0; a < (1u << n); ++a) {
        const unsigned ca = close(n, fam, a);
        for (unsigned x = 0; x < n; ++x) {
            for (unsigned y = 0; y < n; ++y) {
                const bool x_out = !((ca >> x) & 1u);
                const bool x_in = (close(n, fam, a | (1u << y)) >> x) & 1u;
                const bool y_in = (close(n, fam, a | (1u << x)) >> y) & 1u;
                if (x_out && x_in && !y_in) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool geometry(unsigned n, std::uint64_t fam)
{
    if (!matroid(n, fam) || close(n, fam, 0) != 0) {
        return false;
    }
    for (unsigned x = 0; x < n; ++x) {
        if (close(n, fam, 1u << x) != (1u << x)) {
            return false;
        }
    }
    return true;
}

} // namespace oracle
