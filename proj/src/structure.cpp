#include "comax/structure.hpp"

#include <algorithm>

namespace comax {

QuotientRing quotient_by(const RingPtr& R, const LeftIdeal& I, std::string label) {
    if (I.ring != R) throw PreconditionError("quotient_by: ideal belongs to another ring");
    if (!is_two_sided(I)) throw PreconditionError("quotient_by: ideal is not two-sided");

    const FiniteRing& r = *R;
    const std::size_t n = r.size();

    std::vector<Elem> rep(n);
    for (std::size_t a = 0; a < n; ++a) {
        Elem best = static_cast<Elem>(a);
        for (Elem i : I.elements) best = std::min(best, r.add(static_cast<Elem>(a), i));
        rep[a] = best;
    }
    std::vector<Elem> reps;
    for (std::size_t a = 0; a < n; ++a)
        if (rep[a] == a) reps.push_back(static_cast<Elem>(a));
    const std::size_t m = reps.size();
    if (m * I.size() != n)
        throw Error("quotient_by: cosets do not partition " + r.label());

    std::vector<Elem> qid(n, 0);
    for (std::size_t i = 0; i < m; ++i) qid[reps[i]] = static_cast<Elem>(i);

    detail::RingData d;
    d.size = m;
    d.label = label.empty() ? r.label() + "/I" : std::move(label);
    d.kind = CodecKind::table;
    d.add.resize(m * m);
    d.mul.resize(m * m);
    d.labels.reserve(m);
    for (Elem x : reps) d.labels.push_back("[" + r.render(x) + "]");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            d.add[i * m + j] = qid[rep[r.add(reps[i], reps[j])]];
            d.mul[i * m + j] = qid[rep[r.mul(reps[i], reps[j])]];
        }

    QuotientRing Q;
    Q.ring = std::make_shared<FiniteRing>(std::move(d));
    Q.section = std::move(reps);
    Q.projection.resize(n);
    for (std::size_t a = 0; a < n; ++a) Q.projection[a] = qid[rep[a]];
    return Q;
}

std::vector<RingPtr> semisimple_decompose(const RingPtr& S) {
    const FiniteRing& s = *S;
    if (max_ideal_data(s).radical.count() != 1)
        throw PreconditionError("semisimple_decompose: Jacobson radical is nonzero");

    std::vector<Elem> cents = central_idempotents(s);
    std::vector<Elem> prim;
    for (Elem e : cents) {
        if (e == FiniteRing::zero) continue;
        bool minimal = true;
        for (Elem f : cents) {
            if (f == FiniteRing::zero || f == e) continue;
            if (s.mul(f, e) == f) {  // f <= e in the idempotent order
                minimal = false;
                break;
            }
        }
        if (minimal) prim.push_back(e);
    }

    Elem sum = FiniteRing::zero;
    for (Elem e : prim) sum = s.add(sum, e);
    if (sum != s.one())
        throw Error("semisimple_decompose: primitive idempotents do not sum to 1");
    for (std::size_t i = 0; i < prim.size(); ++i)
        for (std::size_t j = i + 1; j < prim.size(); ++j)
            if (s.mul(prim[i], prim[j]) != FiniteRing::zero)
                throw Error("semisimple_decompose: idempotents not orthogonal");

    std::vector<RingPtr> comps;
    for (std::size_t i = 0; i < prim.size(); ++i) {
        DynBitset mask(s.size());
        for (std::size_t x = 0; x < s.size(); ++x) mask.set(s.mul(prim[i], Elem(x)));
        Subring sub = subring_from_elements(
            S, mask, prim[i], s.label() + "#" + std::to_string(i + 1));
        comps.push_back(sub.ring);
    }
    return comps;
}

SimpleComponentId identify_simple_component(const RingPtr& S) {
    const FiniteRing& s = *S;
    if (max_ideal_data(s).radical.count() != 1)
        throw PreconditionError("identify_simple_component: radical is nonzero");
    if (central_idempotents(s).size() != 2)
        throw PreconditionError("identify_simple_component: ring is not simple");

    const std::size_t card = s.size();
    const std::size_t mcount = max_ideal_data(s).ideals.size();

    auto pow_sz = [](std::size_t base, unsigned exp) {
        std::size_t r = 1;
        for (unsigned i = 0; i < exp; ++i) r *= base;
        return r;
    };

    std::vector<SimpleComponentId> hits;
    for (unsigned n = 1; pow_sz(2, n * n) <= card; ++n) {
        const unsigned cells = n * n;
        unsigned q = 0;
        for (unsigned c = 2; pow_sz(c, cells) <= card; ++c)
            if (pow_sz(c, cells) == card) {
                q = c;
                break;
            }
        if (q == 0 || !is_prime_power(q)) continue;
        // a matrix ring M_n(GF(q)) has (q^n - 1)/(q - 1) maximal left ideals
        std::size_t expected = 0;
        for (unsigned i = 0; i < n; ++i) expected += pow_sz(q, i);
        if (expected == mcount) hits.push_back({n, q, card, mcount});
    }

    if (hits.empty())
        throw FalsificationError(s.label() +
                                 " is not a matrix ring over a finite field (size " +
                                 std::to_string(card) + ", " + std::to_string(mcount) +
                                 " maximal left ideals)");
    if (hits.size() > 1)
        throw FalsificationError(s.label() + ": ambiguous matrix-ring identification");
    return hits[0];
}

WedderburnReport wedderburn_report(const RingPtr& R) {
    LeftIdeal J = jacobson_radical(R);
    WedderburnReport rep;
    rep.radical_size = J.size();
    if (!J.is_proper()) {  // zero ring
        rep.quotient_label = R->label() + "/J";
        rep.consistent = R->size() == J.size();
        return rep;
    }
    QuotientRing Q = quotient_by(R, J, R->label() + "/J");
    rep.quotient_label = Q.ring->label();
    std::vector<RingPtr> comps = semisimple_decompose(Q.ring);
    for (const auto& c : comps) rep.components.push_back(identify_simple_component(c));
    std::sort(rep.components.begin(), rep.components.end(),
              [](const SimpleComponentId& a, const SimpleComponentId& b) {
                  return a.q != b.q ? a.q < b.q : a.n < b.n;
              });
    std::size_t prod = 1;
    for (const auto& c : rep.components) {
        std::size_t pw = 1;
        for (unsigned i = 0; i < c.n * c.n; ++i) pw *= c.q;
        prod *= pw;
    }
    rep.consistent = prod == Q.ring->size();
    return rep;
}

std::vector<LeftIdeal> remark6_maximal_ideals(unsigned q) {
    unsigned p = 0, e = 0;
    if (!is_prime_power(q, &p, &e))
        throw InvalidSpecError("remark6: " + std::to_string(q) + " is not a prime power");
    RingPtr F = make_gf(p, e);
    RingPtr M = make_matrix_ring(F, 2);
    const FiniteRing& f = *F;

    auto mat = [&](Elem c00, Elem c01, Elem c10, Elem c11) {
        return M->encode({c00, c01, c10, c11});
    };

    std::vector<LeftIdeal> out;
    for (std::size_t alpha_i = 0; alpha_i < q; ++alpha_i) {
        Elem alpha = static_cast<Elem>(alpha_i);
        DynBitset mask(M->size());
        for (std::size_t a_i = 0; a_i < q; ++a_i)
            for (std::size_t b_i = 0; b_i < q; ++b_i) {
                Elem a = static_cast<Elem>(a_i), b = static_cast<Elem>(b_i);
                // [[a + alpha*b, -(a*alpha) - alpha*b*alpha], [b, -(b*alpha)]]
                Elem c00 = f.add(a, f.mul(alpha, b));
                Elem c01 = f.neg(f.add(f.mul(a, alpha), f.mul(f.mul(alpha, b), alpha)));
                Elem c10 = b;
                Elem c11 = f.neg(f.mul(b, alpha));
                mask.set(mat(c00, c01, c10, c11));
            }
        out.push_back(ideal_from_mask(M, std::move(mask), {}));
    }
    DynBitset mprime(M->size());
    for (std::size_t a_i = 0; a_i < q; ++a_i)
        for (std::size_t b_i = 0; b_i < q; ++b_i)
            mprime.set(mat(0, static_cast<Elem>(a_i), 0, static_cast<Elem>(b_i)));
    out.push_back(ideal_from_mask(M, std::move(mprime), {}));

    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].mask == out[j].mask)
                throw FalsificationError("remark6: explicit ideals are not pairwise distinct");

    const MaxIdealData& d = max_ideal_data(*M);
    if (d.ideals.size() != out.size())
        throw FalsificationError("remark6: expected " + std::to_string(q + 1) +
                                 " maximal left ideals of " + M->label() + ", enumeration has " +
                                 std::to_string(d.ideals.size()));
    for (const auto& I : out) {
        bool found = false;
        for (const auto& m : d.ideals)
            if (I.mask == m) {
                found = true;
                break;
            }
        if (!found)
            throw FalsificationError("remark6: explicit ideal is not a maximal left ideal of " +
                                     M->label());
    }
    return out;
}

// ---------------------------------------------------------------------------
// ring isomorphism

const char* to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::isomorphic: return "isomorphic";
        case IsoVerdict::not_isomorphic: return "not_isomorphic";
        case IsoVerdict::unknown: return "unknown";
    }
    return "?";
}

bool verify_isomorphism(const FiniteRing& A, const FiniteRing& B, const std::vector<Elem>& f) {
    const std::size_t n = A.size();
    if (B.size() != n || f.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (Elem img : f) {
        if (img >= n || hit[img]) return false;
        hit[img] = true;
    }
    if (f[A.one()] != B.one() || f[FiniteRing::zero] != FiniteRing::zero) return false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (f[A.add(Elem(a), Elem(b))] != B.add(f[a], f[b])) return false;
            if (f[A.mul(Elem(a), Elem(b))] != B.mul(f[a], f[b])) return false;
        }
    return true;
}

namespace {

std::vector<unsigned> additive_order_histogram(const FiniteRing& R) {
    std::vector<unsigned> h;
    h.reserve(R.size());
    for (std::size_t a = 0; a < R.size(); ++a) h.push_back(additive_order(R, Elem(a)));
    std::sort(h.begin(), h.end());
    return h;
}

std::vector<unsigned> unit_order_histogram(const FiniteRing& R) {
    std::vector<unsigned> h;
    for (std::size_t a = 0; a < R.size(); ++a)
        if (R.is_unit(Elem(a))) h.push_back(multiplicative_order(R, Elem(a)));
    std::sort(h.begin(), h.end());
    return h;
}

std::size_t idempotent_count(const FiniteRing& R) {
    std::size_t c = 0;
    for (std::size_t a = 0; a < R.size(); ++a)
        if (R.mul(Elem(a), Elem(a)) == Elem(a)) ++c;
    return c;
}

// Extends generator images to a full map by closing under both operations.
// Returns false on conflict.
bool extend_map(const FiniteRing& A, const FiniteRing& B, std::vector<int>& f) {
    const std::size_t n = A.size();
    std::vector<Elem> known;
    known.reserve(n);
    for (std::size_t a = 0; a < n; ++a)
        if (f[a] >= 0) known.push_back(Elem(a));
    std::vector<bool> used(n, false);
    for (Elem a : known) {
        if (used[f[a]]) return false;
        used[f[a]] = true;
    }

    auto assign = [&](Elem x, Elem img) -> int {  // -1 conflict, 0 known, 1 new
        if (f[x] >= 0) return f[x] == img ? 0 : -1;
        if (used[img]) return -1;
        f[x] = img;
        used[img] = true;
        return 1;
    };

    for (std::size_t i = 0; i < known.size(); ++i) {
        Elem x = known[i];
        for (std::size_t j = 0; j <= i; ++j) {
            Elem y = known[j];
            struct Deriv {
                Elem src, img;
            };
            Deriv ds[4] = {
                {A.add(x, y), B.add(Elem(f[x]), Elem(f[y]))},
                {A.mul(x, y), B.mul(Elem(f[x]), Elem(f[y]))},
                {A.add(y, x), B.add(Elem(f[y]), Elem(f[x]))},
                {A.mul(y, x), B.mul(Elem(f[y]), Elem(f[x]))},
            };
            for (const auto& d : ds) {
                int r = assign(d.src, d.img);
                if (r < 0) return false;
                if (r > 0) known.push_back(d.src);
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        if (f[a] < 0) return false;  // generators did not generate A
    return true;
}

}  // namespace

IsoResult ring_isomorphic(const RingPtr& A, const RingPtr& B, std::size_t node_budget) {
    const FiniteRing& a = *A;
    const FiniteRing& b = *B;
    IsoResult res;

    auto fail = [&](const char* name) {
        res.verdict = IsoVerdict::not_isomorphic;
        res.obstruction = name;
        return res;
    };

    if (a.size() != b.size()) return fail("size");
    // The additive-order histogram subsumes the characteristic, so it runs
    // before the remaining screens.
    if (additive_order_histogram(a) != additive_order_histogram(b))
        return fail("additive-order histogram");
    if (additive_order(a, a.one()) != additive_order(b, b.one())) return fail("characteristic");
    if (a.commutative() != b.commutative()) return fail("commutativity");
    if (a.unit_mask().count() != b.unit_mask().count()) return fail("unit count");
    if (idempotent_count(a) != idempotent_count(b)) return fail("idempotent count");
    if (max_ideal_data(a).ideals.size() != max_ideal_data(b).ideals.size())
        return fail("maximal left ideal count");
    if (unit_order_histogram(a) != unit_order_histogram(b))
        return fail("multiplicative-order histogram");

    const std::size_t n = a.size();

    // generating set of A under (+, *), grown from the prime subring
    std::vector<Elem> gens;
    DynBitset closed = unital_closure(a, DynBitset(n));
    while (closed.count() < n) {
        Elem g = 0;
        for (std::size_t x = 0; x < n; ++x)
            if (!closed.test(x)) {
                g = Elem(x);
                break;
            }
        gens.push_back(g);
        DynBitset seed = closed;
        seed.set(g);
        closed = unital_closure(a, seed);
    }

    // candidate images, filtered by cheap local invariants
    std::vector<std::vector<Elem>> cands(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Elem g = gens[i];
        unsigned ao = additive_order(a, g);
        bool un = a.is_unit(g);
        bool idem = a.mul(g, g) == g;
        unsigned mo = un ? multiplicative_order(a, g) : 0;
        for (std::size_t y = 0; y < n; ++y) {
            Elem h = Elem(y);
            if (additive_order(b, h) != ao) continue;
            if (b.is_unit(h) != un) continue;
            if ((b.mul(h, h) == h) != idem) continue;
            if (un && multiplicative_order(b, h) != mo) continue;
            cands[i].push_back(h);
        }
    }

    std::size_t nodes = 0;
    bool budget_hit = false;
    std::vector<int> base(n, -1);
    base[FiniteRing::zero] = FiniteRing::zero;
    base[a.one()] = b.one();
    std::vector<Elem> image(gens.size());
    std::vector<Elem> witness;

    auto try_tuple = [&]() -> bool {
        std::vector<int> f = base;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (f[gens[i]] >= 0 && f[gens[i]] != image[i]) return false;
            f[gens[i]] = image[i];
        }
        if (!extend_map(a, b, f)) return false;
        std::vector<Elem> wit(n);
        for (std::size_t x = 0; x < n; ++x) wit[x] = Elem(f[x]);
        if (!verify_isomorphism(a, b, wit)) return false;
        witness = std::move(wit);
        return true;
    };

    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (++nodes > node_budget) {
            budget_hit = true;
            return false;
        }
        if (depth == gens.size()) return try_tuple();
        for (Elem h : cands[depth]) {
            image[depth] = h;
            if (self(self, depth + 1)) return true;
            if (budget_hit) return false;
        }
        return false;
    };

    if (search(search, 0)) {
        res.verdict = IsoVerdict::isomorphic;
        res.witness = std::move(witness);
        return res;
    }
    if (budget_hit) {
        res.verdict = IsoVerdict::unknown;
        res.obstruction = "node budget exhausted";
        return res;
    }
    res.verdict = IsoVerdict::not_isomorphic;
    res.obstruction = "no homomorphic extension of generator images";
    return res;
}

}  // namespace comax
