#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comax/bitset.hpp"
#include "comax/common.hpp"

namespace comax {

// How element ids map to structured literals.
enum class CodecKind {
    residue,  // integer residue mod n
    poly,     // coefficient vector over Z_p, constant term first
    matrix,   // n x n array of base-ring ids, row-major
    tuple,    // tuple of component-ring ids
    table     // opaque: id is the literal (table rings, subrings, quotients)
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

namespace detail {
struct RingData {
    std::size_t size = 0;
    std::string label;
    std::vector<Elem> add, mul;  // flat size*size, row-major
    CodecKind kind = CodecKind::table;
    unsigned poly_p = 0, poly_k = 0;
    std::vector<unsigned> poly_modulus;  // ascending coeffs, monic
    unsigned mat_dim = 0;
    std::vector<RingPtr> parts;  // matrix base (one entry) or tuple factors
    Elem natural_one = 1;        // positional id the unity occupies pre-swap
    std::vector<std::string> labels;  // optional; generated from codec if empty
};
}  // namespace detail

// Maximal-left-ideal data cached on the ring (masks only, no back references).
struct MaxIdealData {
    std::vector<DynBitset> ideals;  // sorted by DynBitset::lex_less
    std::vector<std::vector<Elem>> generators;
    DynBitset radical;  // intersection; all of R when there are no ideals
};

// A finite unital ring with dense operation tables and a structured element
// codec. Id 0 is the additive identity and id 1 the multiplicative identity
// for every constructor. Instances are immutable after construction; the
// lazy caches are safe to fill from concurrent readers.
class FiniteRing {
public:
    explicit FiniteRing(detail::RingData data);
    FiniteRing(const FiniteRing&) = delete;
    FiniteRing& operator=(const FiniteRing&) = delete;

    std::size_t size() const { return n_; }
    const std::string& label() const { return label_; }

    Elem add(Elem a, Elem b) const { return add_[std::size_t(a) * n_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * n_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    static constexpr Elem zero = 0;
    Elem one() const { return n_ > 1 ? Elem(1) : Elem(0); }

    CodecKind codec_kind() const { return kind_; }
    unsigned poly_p() const { return poly_p_; }
    unsigned poly_degree() const { return poly_k_; }
    const std::vector<unsigned>& poly_modulus() const { return poly_modulus_; }
    unsigned matrix_dim() const { return mat_dim_; }
    const std::vector<RingPtr>& parts() const { return parts_; }

    // Structured literal: residue -> {r}; poly -> k coefficients; matrix ->
    // dim*dim base ids row-major; tuple -> component ids; table -> {id}.
    std::vector<unsigned> decode(Elem a) const;
    Elem encode(const std::vector<unsigned>& digits) const;
    const std::string& render(Elem a) const { return labels_[a]; }

    bool is_unit(Elem a) const { return unit_mask().test(a); }
    bool is_left_invertible(Elem a) const { return left_inv_mask().test(a); }
    const DynBitset& unit_mask() const;
    const DynBitset& left_inv_mask() const;

    // {r*a : r in R} and {1 - u : u in Ra}; precomputed for all elements on
    // first use (the comaximality test Ra+Rb=R becomes one intersection).
    const DynBitset& principal_row(Elem a) const;
    const DynBitset& comax_row(Elem a) const;

    bool commutative() const;
    std::optional<std::pair<Elem, Elem>> noncommuting_pair() const;

    // Cache slot filled by the ideals module.
    const MaxIdealData* cached_max_data() const;
    const MaxIdealData& install_max_data(std::unique_ptr<MaxIdealData> d) const;

private:
    void ensure_units() const;
    void ensure_rows() const;
    void ensure_comm() const;
    std::string make_label(Elem a) const;

    std::size_t n_;
    std::string label_;
    std::vector<Elem> add_, mul_, neg_;
    CodecKind kind_;
    unsigned poly_p_, poly_k_;
    std::vector<unsigned> poly_modulus_;
    unsigned mat_dim_;
    std::vector<RingPtr> parts_;
    Elem natural_one_;
    std::vector<std::string> labels_;

    mutable std::once_flag units_once_, rows_once_, comm_once_;
    mutable DynBitset units_, left_inv_;
    mutable std::vector<DynBitset> principal_, comax_;
    mutable bool commutative_ = true;
    mutable std::optional<std::pair<Elem, Elem>> noncomm_witness_;
    mutable std::mutex max_mu_;
    mutable std::shared_ptr<const MaxIdealData> max_data_;
};

// Constructors. All enforce the global size cap and the 0 -> zero, 1 -> one
// encoding convention.
RingPtr make_zmod(unsigned n);
RingPtr make_gf(unsigned p, unsigned k);
RingPtr make_matrix_ring(const RingPtr& base, unsigned dim);
RingPtr make_product(std::vector<RingPtr> factors);

// Table-backed ring; validates all ring axioms before returning (exhaustive
// triple loops up to 256 elements, >= 10^5 sampled triples above).
RingPtr make_table_ring(const std::vector<std::vector<Elem>>& add,
                        const std::vector<std::vector<Elem>>& mul,
                        std::string label = "",
                        std::vector<std::string> elem_labels = {});

// Subring on an additively and multiplicatively closed subset of `parent`
// containing 0 and `unity` (the subring's multiplicative identity, which
// need not be the parent's). Element order: ascending parent id, then the
// 0->zero / 1->one swap.
struct Subring {
    RingPtr ring;
    std::vector<Elem> to_parent;  // subring id -> parent id
};
Subring subring_from_elements(const RingPtr& parent, const DynBitset& elements,
                              Elem unity, std::string label);

// Smallest subset containing seed, 0 and 1, closed under add and mul.
DynBitset unital_closure(const FiniteRing& R, const DynBitset& seed);

// Element-level queries.
std::vector<Elem> units(const FiniteRing& R);
bool is_left_invertible(const FiniteRing& R, Elem a);
std::vector<Elem> central_idempotents(const FiniteRing& R);
bool is_commutative(const FiniteRing& R);
unsigned additive_order(const FiniteRing& R, Elem a);
unsigned multiplicative_order(const FiniteRing& R, Elem u);  // pre: unit

// Throws AxiomError naming the violated axiom and a witness triple.
void validate_ring_axioms(const FiniteRing& R, std::size_t exhaustive_limit = 256,
                          std::size_t samples = 100000);

}  // namespace comax
