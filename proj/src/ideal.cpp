#include "comax/ideal.hpp"

#include <algorithm>
#include <map>

namespace comax {

bool is_left_ideal_set(const FiniteRing& R, const DynBitset& mask) {
    if (!mask.test(FiniteRing::zero)) return false;
    const std::size_t n = R.size();
    auto elems = mask.to_elems();
    for (Elem x : elems) {
        for (Elem y : elems)
            if (!mask.test(R.add(x, y))) return false;
        for (std::size_t r = 0; r < n; ++r)
            if (!mask.test(R.mul(Elem(r), x))) return false;
    }
    return true;
}

LeftIdeal ideal_from_mask(const RingPtr& R, DynBitset mask, std::vector<Elem> generators) {
    if (!is_left_ideal_set(*R, mask))
        throw PreconditionError("set is not a left ideal of " + R->label());
    LeftIdeal I;
    I.ring = R;
    I.elements = mask.to_elems();
    I.mask = std::move(mask);
    I.generators = std::move(generators);
    return I;
}

LeftIdeal principal_left_ideal(const RingPtr& R, Elem a) {
    DynBitset m = R->principal_row(a);
    if (!is_left_ideal_set(*R, m))
        throw Error("principal_left_ideal: Ra is not closed in " + R->label());
    LeftIdeal I;
    I.ring = R;
    I.elements = m.to_elems();
    I.mask = std::move(m);
    I.generators = {a};
    return I;
}

namespace {

DynBitset closure_mask(const FiniteRing& R, const std::vector<Elem>& seed) {
    const std::size_t n = R.size();
    DynBitset in(n);
    in.set(FiniteRing::zero);
    std::vector<Elem> work;
    auto push = [&](Elem x) {
        if (!in.test(x)) {
            in.set(x);
            work.push_back(x);
        }
    };
    for (Elem s : seed) push(s);
    std::vector<Elem> members{FiniteRing::zero};
    while (!work.empty()) {
        Elem x = work.back();
        work.pop_back();
        // left multiples of x, then sums with everything already present
        for (std::size_t r = 0; r < n; ++r) push(R.mul(Elem(r), x));
        for (Elem y : members) push(R.add(x, y));
        members.push_back(x);
    }
    return in;
}

DynBitset sum_mask(const FiniteRing& R, const DynBitset& A, const DynBitset& B) {
    DynBitset out(R.size());
    auto ea = A.to_elems();
    auto eb = B.to_elems();
    for (Elem x : ea)
        for (Elem y : eb) out.set(R.add(x, y));
    return out;
}

}  // namespace

LeftIdeal left_ideal_closure(const RingPtr& R, const std::vector<Elem>& seed) {
    std::vector<Elem> gens = seed;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    DynBitset m = closure_mask(*R, gens);
    LeftIdeal I;
    I.ring = R;
    I.elements = m.to_elems();
    I.mask = std::move(m);
    I.generators = std::move(gens);
    return I;
}

LeftIdeal ideal_sum(const LeftIdeal& I, const LeftIdeal& J) {
    if (I.ring != J.ring) throw PreconditionError("ideal_sum: ideals over different rings");
    const FiniteRing& R = *I.ring;
    DynBitset m = sum_mask(R, I.mask, J.mask);
    // cross-check: the elementwise sum must be the join, i.e. the closure of
    // the two element sets together
    std::vector<Elem> joint = I.elements;
    joint.insert(joint.end(), J.elements.begin(), J.elements.end());
    if (!(closure_mask(R, joint) == m))
        throw Error("ideal_sum: elementwise sum disagrees with the join closure in " +
                    R.label());
    std::vector<Elem> gens = I.generators;
    gens.insert(gens.end(), J.generators.begin(), J.generators.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    LeftIdeal S;
    S.ring = I.ring;
    S.elements = m.to_elems();
    S.mask = std::move(m);
    S.generators = std::move(gens);
    return S;
}

const MaxIdealData& max_ideal_data(const FiniteRing& R) {
    if (const MaxIdealData* d = R.cached_max_data()) return *d;

    const std::size_t n = R.size();
    const Elem e1 = R.one();

    // proper principal left ideals, deduplicated
    std::vector<std::pair<DynBitset, std::vector<Elem>>> family;
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    auto insert = [&](DynBitset m, std::vector<Elem> gens) {
        if (seen.count(m.words())) return false;
        seen.emplace(m.words(), family.size());
        family.emplace_back(std::move(m), std::move(gens));
        return true;
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (R.is_left_invertible(Elem(a))) continue;  // Ra = R
        insert(R.principal_row(Elem(a)), {Elem(a)});
    }

    // saturate under proper pairwise sums (join closure of the family)
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const DynBitset& A = family[i].first;
            const DynBitset& B = family[j].first;
            if (A.is_subset_of(B) || B.is_subset_of(A)) continue;
            DynBitset S = sum_mask(R, A, B);
            if (S.test(e1)) continue;  // improper
            if (!seen.count(S.words())) {
                std::vector<Elem> gens = family[i].second;
                gens.insert(gens.end(), family[j].second.begin(), family[j].second.end());
                std::sort(gens.begin(), gens.end());
                gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
                insert(std::move(S), std::move(gens));
            }
        }
    }

    // keep maximal members under inclusion, sorted by element set
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < family.size() && maximal; ++j)
            if (i != j && family[i].first.is_subset_of(family[j].first)) maximal = false;
        if (maximal) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
        return DynBitset::lex_less(family[a].first, family[b].first);
    });
    MaxIdealData sorted;
    for (std::size_t i : keep) {
        sorted.ideals.push_back(std::move(family[i].first));
        sorted.generators.push_back(std::move(family[i].second));
    }
    sorted.radical = DynBitset(n);
    if (sorted.ideals.empty()) {
        for (std::size_t a = 0; a < n; ++a) sorted.radical.set(a);
    } else {
        sorted.radical = sorted.ideals[0];
        for (std::size_t i = 1; i < sorted.ideals.size(); ++i)
            sorted.radical &= sorted.ideals[i];
    }

    // every proper principal ideal must lie inside some maximal member
    for (std::size_t a = 0; a < n; ++a) {
        if (R.is_left_invertible(Elem(a))) continue;
        const DynBitset& m = R.principal_row(Elem(a));
        bool covered = false;
        for (const auto& mx : sorted.ideals)
            if (m.is_subset_of(mx)) {
                covered = true;
                break;
            }
        if (!covered)
            throw Error("maximal_left_ideals: principal ideal not covered in " + R.label());
    }

    return R.install_max_data(std::make_unique<MaxIdealData>(std::move(sorted)));
}

std::vector<LeftIdeal> maximal_left_ideals(const RingPtr& R) {
    const MaxIdealData& d = max_ideal_data(*R);
    std::vector<LeftIdeal> out;
    out.reserve(d.ideals.size());
    for (std::size_t i = 0; i < d.ideals.size(); ++i) {
        LeftIdeal I;
        I.ring = R;
        I.mask = d.ideals[i];
        I.elements = I.mask.to_elems();
        I.generators = d.generators[i];
        out.push_back(std::move(I));
    }
    return out;
}

LeftIdeal jacobson_radical(const RingPtr& R) {
    const MaxIdealData& d = max_ideal_data(*R);
    LeftIdeal J;
    J.ring = R;
    J.mask = d.radical;
    J.elements = J.mask.to_elems();
    if (!is_two_sided(J))
        throw FalsificationError("jacobson_radical: intersection of the maximal left ideals of " +
                                 R->label() + " is not two-sided");
    return J;
}

bool is_two_sided(const LeftIdeal& I) {
    const FiniteRing& R = *I.ring;
    const std::size_t n = R.size();
    for (Elem x : I.elements)
        for (std::size_t r = 0; r < n; ++r)
            if (!I.mask.test(R.mul(x, Elem(r)))) return false;
    return true;
}

std::optional<Elem> avoidance_pick(const RingPtr& R, const std::vector<LeftIdeal>& inside,
                                   const std::vector<LeftIdeal>& avoid) {
    const std::size_t n = R->size();
    DynBitset cand(n);
    for (std::size_t a = 0; a < n; ++a) cand.set(a);
    for (const auto& I : inside) cand &= I.mask;
    for (const auto& A : avoid) cand = cand.andnot(A.mask);
    int first = cand.find_first();
    if (first < 0) return std::nullopt;
    return static_cast<Elem>(first);
}

}  // namespace comax
