#include "comax/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>

namespace comax {

AxiomError::AxiomError(std::string axiom, std::vector<Elem> witness)
    : Error([&] {
          std::ostringstream os;
          os << "ring axiom violated: " << axiom << " (witness";
          for (Elem e : witness) os << ' ' << e;
          os << ')';
          return os.str();
      }()),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

namespace {

constexpr std::size_t kHardCap = 65535;  // Elem is 16-bit

std::atomic<std::size_t>& cap_slot() {
    static std::atomic<std::size_t> cap = [] {
        std::size_t c = 4096;
        if (const char* env = std::getenv("COMAX_SIZE_CAP")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && v >= 2) c = static_cast<std::size_t>(v);
        }
        return std::min(c, kHardCap);
    }();
    return cap;
}

void check_cap(std::size_t n, const std::string& what) {
    if (n > size_cap())
        throw SizeLimitError(what + " would have " + std::to_string(n) +
                             " elements; cap is " + std::to_string(size_cap()));
}

// returns base^exp or nullopt if it exceeds limit
std::optional<std::size_t> checked_pow(std::size_t base, unsigned exp, std::size_t limit) {
    std::size_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
    }
    return r;
}

}  // namespace

std::size_t size_cap() { return cap_slot().load(); }

void set_size_cap(std::size_t cap) {
    cap_slot().store(std::clamp<std::size_t>(cap, 2, kHardCap));
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(unsigned n, unsigned* p, unsigned* e) {
    if (n < 2) return false;
    unsigned q = n;
    unsigned base = 0;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    if (base == 0) base = n;  // n itself prime
    unsigned exp = 0;
    while (q % base == 0) {
        q /= base;
        ++exp;
    }
    if (q != 1) return false;
    if (p) *p = base;
    if (e) *e = exp;
    return true;
}

std::vector<unsigned> distinct_prime_factors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// ---------------------------------------------------------------------------
// FiniteRing

FiniteRing::FiniteRing(detail::RingData d)
    : n_(d.size),
      label_(std::move(d.label)),
      add_(std::move(d.add)),
      mul_(std::move(d.mul)),
      kind_(d.kind),
      poly_p_(d.poly_p),
      poly_k_(d.poly_k),
      poly_modulus_(std::move(d.poly_modulus)),
      mat_dim_(d.mat_dim),
      parts_(std::move(d.parts)),
      natural_one_(d.natural_one),
      labels_(std::move(d.labels)) {
    neg_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n_; ++b) {
            if (add(Elem(a), Elem(b)) == 0) {
                neg_[a] = Elem(b);
                found = true;
                break;
            }
        }
        if (!found) throw AxiomError("additive inverse missing", {Elem(a)});
    }
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (std::size_t a = 0; a < n_; ++a) labels_.push_back(make_label(Elem(a)));
    }
}

std::vector<unsigned> FiniteRing::decode(Elem a) const {
    std::size_t nat = a;
    if (natural_one_ != 1 && n_ > 1) {
        if (a == 1)
            nat = natural_one_;
        else if (a == natural_one_)
            nat = 1;
    }
    switch (kind_) {
        case CodecKind::residue:
            return {static_cast<unsigned>(nat)};
        case CodecKind::poly: {
            std::vector<unsigned> c(poly_k_);
            for (unsigned i = 0; i < poly_k_; ++i) {
                c[i] = static_cast<unsigned>(nat % poly_p_);
                nat /= poly_p_;
            }
            return c;
        }
        case CodecKind::matrix: {
            std::size_t base = parts_[0]->size();
            std::vector<unsigned> c(std::size_t(mat_dim_) * mat_dim_);
            for (auto& x : c) {
                x = static_cast<unsigned>(nat % base);
                nat /= base;
            }
            return c;
        }
        case CodecKind::tuple: {
            std::vector<unsigned> c(parts_.size());
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                c[i] = static_cast<unsigned>(nat % parts_[i]->size());
                nat /= parts_[i]->size();
            }
            return c;
        }
        case CodecKind::table:
            return {static_cast<unsigned>(a)};
    }
    return {};
}

Elem FiniteRing::encode(const std::vector<unsigned>& digits) const {
    std::size_t nat = 0;
    auto check = [&](std::size_t got, std::size_t want) {
        if (got != want)
            throw InvalidSpecError("encode: expected " + std::to_string(want) +
                                   " digits, got " + std::to_string(got));
    };
    switch (kind_) {
        case CodecKind::residue:
        case CodecKind::table: {
            check(digits.size(), 1);
            if (digits[0] >= n_) throw InvalidSpecError("encode: digit out of range");
            nat = digits[0];
            break;
        }
        case CodecKind::poly: {
            check(digits.size(), poly_k_);
            for (unsigned i = poly_k_; i-- > 0;) {
                if (digits[i] >= poly_p_) throw InvalidSpecError("encode: digit out of range");
                nat = nat * poly_p_ + digits[i];
            }
            break;
        }
        case CodecKind::matrix: {
            std::size_t base = parts_[0]->size();
            check(digits.size(), std::size_t(mat_dim_) * mat_dim_);
            for (std::size_t i = digits.size(); i-- > 0;) {
                if (digits[i] >= base) throw InvalidSpecError("encode: digit out of range");
                nat = nat * base + digits[i];
            }
            break;
        }
        case CodecKind::tuple: {
            check(digits.size(), parts_.size());
            for (std::size_t i = digits.size(); i-- > 0;) {
                if (digits[i] >= parts_[i]->size())
                    throw InvalidSpecError("encode: digit out of range");
                nat = nat * parts_[i]->size() + digits[i];
            }
            break;
        }
    }
    Elem ext = static_cast<Elem>(nat);
    if (natural_one_ != 1 && n_ > 1) {
        if (ext == 1)
            ext = natural_one_;
        else if (ext == natural_one_)
            ext = 1;
    }
    return ext;
}

std::string FiniteRing::make_label(Elem a) const {
    auto d = decode(a);
    switch (kind_) {
        case CodecKind::residue:
        case CodecKind::table:
            return std::to_string(d[0]);
        case CodecKind::poly: {
            std::string s;
            for (unsigned i = poly_k_; i-- > 0;) {
                unsigned c = d[i];
                if (c == 0) continue;
                if (!s.empty()) s += '+';
                if (i == 0) {
                    s += std::to_string(c);
                } else {
                    if (c > 1) s += std::to_string(c);
                    s += 'x';
                    if (i > 1) s += '^' + std::to_string(i);
                }
            }
            return s.empty() ? "0" : s;
        }
        case CodecKind::matrix: {
            const FiniteRing& base = *parts_[0];
            std::string s = "[";
            for (unsigned r = 0; r < mat_dim_; ++r) {
                s += '[';
                for (unsigned c = 0; c < mat_dim_; ++c) {
                    if (c) s += ',';
                    s += base.render(static_cast<Elem>(d[std::size_t(r) * mat_dim_ + c]));
                }
                s += ']';
                if (r + 1 < mat_dim_) s += ',';
            }
            return s + ']';
        }
        case CodecKind::tuple: {
            std::string s = "(";
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) s += ',';
                s += parts_[i]->render(static_cast<Elem>(d[i]));
            }
            return s + ')';
        }
    }
    return {};
}

void FiniteRing::ensure_units() const {
    std::call_once(units_once_, [&] {
        DynBitset left(n_), right(n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (mul(Elem(a), Elem(b)) == one()) {
                    right.set(a);  // a has a right inverse
                    left.set(b);   // b has a left inverse
                }
        units_ = left & right;
        left_inv_ = left;
    });
}

const DynBitset& FiniteRing::unit_mask() const {
    ensure_units();
    return units_;
}

const DynBitset& FiniteRing::left_inv_mask() const {
    ensure_units();
    return left_inv_;
}

void FiniteRing::ensure_rows() const {
    std::call_once(rows_once_, [&] {
        principal_.assign(n_, DynBitset(n_));
        comax_.assign(n_, DynBitset(n_));
        const Elem e1 = one();
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t r = 0; r < n_; ++r) {
                Elem u = mul(Elem(r), Elem(a));
                principal_[a].set(u);
                comax_[a].set(sub(e1, u));
            }
        }
    });
}

const DynBitset& FiniteRing::principal_row(Elem a) const {
    ensure_rows();
    return principal_[a];
}

const DynBitset& FiniteRing::comax_row(Elem a) const {
    ensure_rows();
    return comax_[a];
}

void FiniteRing::ensure_comm() const {
    std::call_once(comm_once_, [&] {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = a + 1; b < n_; ++b)
                if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) {
                    commutative_ = false;
                    noncomm_witness_ = {Elem(a), Elem(b)};
                    return;
                }
        commutative_ = true;
    });
}

bool FiniteRing::commutative() const {
    ensure_comm();
    return commutative_;
}

std::optional<std::pair<Elem, Elem>> FiniteRing::noncommuting_pair() const {
    ensure_comm();
    return noncomm_witness_;
}

const MaxIdealData* FiniteRing::cached_max_data() const {
    std::lock_guard lk(max_mu_);
    return max_data_.get();
}

const MaxIdealData& FiniteRing::install_max_data(std::unique_ptr<MaxIdealData> d) const {
    std::lock_guard lk(max_mu_);
    if (!max_data_) max_data_ = std::move(d);
    return *max_data_;
}

// ---------------------------------------------------------------------------
// polynomial helpers for GF(p^k)

namespace {

using Poly = std::vector<unsigned>;  // coeffs ascending

// reduce f modulo the monic polynomial m, coefficients mod p
Poly poly_mod(Poly f, const Poly& m, unsigned p) {
    while (f.size() >= m.size()) {
        unsigned lead = f.back() % p;
        if (lead) {
            std::size_t shift = f.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i)
                f[shift + i] = (f[shift + i] + p - (lead * m[i]) % p) % p;
        }
        f.pop_back();
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

bool poly_is_zero(const Poly& f) {
    for (unsigned c : f)
        if (c) return false;
    return true;
}

// trial division by every monic polynomial of degree 1..deg(f)/2
bool poly_is_irreducible(const Poly& f, unsigned p) {
    unsigned k = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= k; ++d) {
        std::size_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::size_t t = 0; t < count; ++t) {
            Poly g(d + 1, 0);
            std::size_t v = t;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over Z_p, where
// coefficient vectors are compared from the constant term up.
Poly smallest_irreducible(unsigned p, unsigned k) {
    std::size_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::size_t t = 0; t < count; ++t) {
        Poly f(k + 1, 0);
        std::size_t v = t;
        for (unsigned i = k; i-- > 0;) {  // constant term varies slowest
            f[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        f[k] = 1;
        if (poly_is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable for valid p, k
}

// Applies the 0->zero / 1->one convention: swaps positional ids 1 and
// natural_one in both tables.
detail::RingData swap_one(detail::RingData d) {
    if (d.natural_one == 1 || d.size < 2) return d;
    const std::size_t n = d.size;
    const Elem u = d.natural_one;
    auto perm = [&](Elem x) -> Elem { return x == 1 ? u : (x == u ? Elem(1) : x); };
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = perm(d.add[std::size_t(perm(Elem(a))) * n + perm(Elem(b))]);
            mul[a * n + b] = perm(d.mul[std::size_t(perm(Elem(a))) * n + perm(Elem(b))]);
        }
    d.add = std::move(add);
    d.mul = std::move(mul);
    return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// constructors

RingPtr make_zmod(unsigned n) {
    if (n < 2) throw InvalidSpecError("Zmod requires n >= 2");
    check_cap(n, "Z" + std::to_string(n));
    detail::RingData d;
    d.size = n;
    d.label = "Z" + std::to_string(n);
    d.kind = CodecKind::residue;
    d.add.resize(std::size_t(n) * n);
    d.mul.resize(std::size_t(n) * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            d.add[a * n + b] = static_cast<Elem>((a + b) % n);
            d.mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    return std::make_shared<FiniteRing>(std::move(d));
}

RingPtr make_gf(unsigned p, unsigned k) {
    if (!is_prime(p)) throw InvalidSpecError("GF: " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidSpecError("GF: extension degree must be >= 1");
    auto q = checked_pow(p, k, size_cap());
    if (!q) throw SizeLimitError("GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                 ") exceeds the size cap");
    const std::size_t n = *q;
    check_cap(n, "GF(" + std::to_string(n) + ")");

    Poly modulus = smallest_irreducible(p, k);
    detail::RingData d;
    d.size = n;
    d.label = "GF(" + std::to_string(n) + ")";
    d.kind = CodecKind::poly;
    d.poly_p = p;
    d.poly_k = k;
    d.poly_modulus = modulus;
    d.add.resize(n * n);
    d.mul.resize(n * n);

    auto digits = [&](std::size_t v) {
        Poly c(k);
        for (unsigned i = 0; i < k; ++i) {
            c[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        return c;
    };
    auto undigits = [&](const Poly& c) {
        std::size_t v = 0;
        for (unsigned i = k; i-- > 0;) v = v * p + (i < c.size() ? c[i] % p : 0);
        return static_cast<Elem>(v);
    };

    std::vector<Poly> dec(n);
    for (std::size_t a = 0; a < n; ++a) dec[a] = digits(a);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Poly s(k);
            for (unsigned i = 0; i < k; ++i) s[i] = (dec[a][i] + dec[b][i]) % p;
            d.add[a * n + b] = undigits(s);
            d.mul[a * n + b] = undigits(poly_mod(poly_mul(dec[a], dec[b], p), modulus, p));
        }
    return std::make_shared<FiniteRing>(std::move(d));
}

RingPtr make_matrix_ring(const RingPtr& base, unsigned dim) {
    if (!base) throw InvalidSpecError("matrix ring: null base");
    if (dim < 1) throw InvalidSpecError("matrix ring: dimension must be >= 1");
    const std::size_t bn = base->size();
    const unsigned cells = dim * dim;
    auto sz = checked_pow(bn, cells, size_cap());
    if (!sz)
        throw SizeLimitError("M" + std::to_string(dim) + "(" + base->label() +
                             ") exceeds the size cap");
    const std::size_t n = *sz;
    check_cap(n, "M" + std::to_string(dim) + "(" + base->label() + ")");

    detail::RingData d;
    d.size = n;
    d.label = "M" + std::to_string(dim) + "(" + base->label() + ")";
    d.kind = CodecKind::matrix;
    d.mat_dim = dim;
    d.parts = {base};

    std::vector<std::vector<Elem>> dec(n, std::vector<Elem>(cells));
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t v = a;
        for (unsigned i = 0; i < cells; ++i) {
            dec[a][i] = static_cast<Elem>(v % bn);
            v /= bn;
        }
    }
    auto undigits = [&](const std::vector<Elem>& c) {
        std::size_t v = 0;
        for (unsigned i = cells; i-- > 0;) v = v * bn + c[i];
        return static_cast<Elem>(v);
    };

    d.add.resize(n * n);
    d.mul.resize(n * n);
    std::vector<Elem> cell(cells);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (unsigned i = 0; i < cells; ++i) cell[i] = base->add(dec[a][i], dec[b][i]);
            d.add[a * n + b] = undigits(cell);
            for (unsigned r = 0; r < dim; ++r)
                for (unsigned c = 0; c < dim; ++c) {
                    Elem acc = 0;
                    for (unsigned t = 0; t < dim; ++t)
                        acc = base->add(acc,
                                        base->mul(dec[a][r * dim + t], dec[b][t * dim + c]));
                    cell[r * dim + c] = acc;
                }
            d.mul[a * n + b] = undigits(cell);
        }

    std::vector<Elem> idm(cells, 0);
    for (unsigned i = 0; i < dim; ++i) idm[i * dim + i] = base->one();
    d.natural_one = undigits(idm);
    return std::make_shared<FiniteRing>(swap_one(std::move(d)));
}

RingPtr make_product(std::vector<RingPtr> factors) {
    if (factors.empty()) throw InvalidSpecError("product: at least one factor required");
    std::size_t n = 1;
    std::string label;
    for (const auto& f : factors) {
        if (!f) throw InvalidSpecError("product: null factor");
        if (n > size_cap() / f->size())
            throw SizeLimitError("product exceeds the size cap");
        n *= f->size();
        if (!label.empty()) label += " x ";
        label += f->label();
    }
    check_cap(n, label);

    const std::size_t m = factors.size();
    detail::RingData d;
    d.size = n;
    d.label = std::move(label);
    d.kind = CodecKind::tuple;
    d.parts = factors;

    std::vector<std::vector<Elem>> dec(n, std::vector<Elem>(m));
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t v = a;
        for (std::size_t i = 0; i < m; ++i) {
            dec[a][i] = static_cast<Elem>(v % factors[i]->size());
            v /= factors[i]->size();
        }
    }
    auto undigits = [&](const std::vector<Elem>& c) {
        std::size_t v = 0;
        for (std::size_t i = m; i-- > 0;) v = v * factors[i]->size() + c[i];
        return static_cast<Elem>(v);
    };

    d.add.resize(n * n);
    d.mul.resize(n * n);
    std::vector<Elem> cell(m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < m; ++i) cell[i] = factors[i]->add(dec[a][i], dec[b][i]);
            d.add[a * n + b] = undigits(cell);
            for (std::size_t i = 0; i < m; ++i) cell[i] = factors[i]->mul(dec[a][i], dec[b][i]);
            d.mul[a * n + b] = undigits(cell);
        }

    std::vector<Elem> ones(m);
    for (std::size_t i = 0; i < m; ++i) ones[i] = factors[i]->one();
    d.natural_one = undigits(ones);
    return std::make_shared<FiniteRing>(swap_one(std::move(d)));
}

RingPtr make_table_ring(const std::vector<std::vector<Elem>>& add,
                        const std::vector<std::vector<Elem>>& mul, std::string label,
                        std::vector<std::string> elem_labels) {
    const std::size_t n = add.size();
    if (n == 0) throw InvalidSpecError("table ring: empty tables");
    check_cap(n, "table ring");
    if (mul.size() != n) throw InvalidSpecError("table ring: add and mul sizes differ");
    detail::RingData d;
    d.size = n;
    d.label = label.empty() ? "table[" + std::to_string(n) + "]" : std::move(label);
    d.kind = CodecKind::table;
    d.add.resize(n * n);
    d.mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (add[a].size() != n || mul[a].size() != n)
            throw InvalidSpecError("table ring: tables must be square");
        for (std::size_t b = 0; b < n; ++b) {
            if (add[a][b] >= n || mul[a][b] >= n)
                throw InvalidSpecError("table ring: entry out of range");
            d.add[a * n + b] = add[a][b];
            d.mul[a * n + b] = mul[a][b];
        }
    }
    if (!elem_labels.empty()) {
        if (elem_labels.size() != n)
            throw InvalidSpecError("table ring: wrong number of element labels");
        d.labels = std::move(elem_labels);
    }
    auto R = std::make_shared<FiniteRing>(std::move(d));
    validate_ring_axioms(*R);
    return R;
}

Subring subring_from_elements(const RingPtr& parent, const DynBitset& elements, Elem unity,
                              std::string label) {
    if (!parent) throw InvalidSpecError("subring: null parent");
    if (!elements.test(0) || !elements.test(unity))
        throw PreconditionError("subring: subset must contain 0 and its unity");
    std::vector<Elem> elems = elements.to_elems();
    const std::size_t n = elems.size();

    // natural order: ascending parent id; then swap so unity lands on id 1
    std::size_t unity_pos = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (elems[i] == unity) unity_pos = i;
    std::vector<Elem> order = elems;
    if (n > 1 && unity_pos != 1) std::swap(order[1], order[unity_pos]);

    std::vector<Elem> rank(parent->size(), 0);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<Elem>(i);

    detail::RingData d;
    d.size = n;
    d.label = std::move(label);
    d.kind = CodecKind::table;
    d.add.resize(n * n);
    d.mul.resize(n * n);
    d.labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.labels.push_back(parent->render(order[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Elem s = parent->add(order[i], order[j]);
            Elem m = parent->mul(order[i], order[j]);
            if (!elements.test(s) || !elements.test(m))
                throw PreconditionError("subring: subset is not closed under the operations");
            d.add[i * n + j] = rank[s];
            d.mul[i * n + j] = rank[m];
        }
    for (std::size_t i = 0; i < n; ++i) {
        Elem x = order[i];
        if (parent->mul(unity, x) != x || parent->mul(x, unity) != x)
            throw PreconditionError("subring: designated unity is not neutral on the subset");
    }
    return Subring{std::make_shared<FiniteRing>(std::move(d)), std::move(order)};
}

DynBitset unital_closure(const FiniteRing& R, const DynBitset& seed) {
    DynBitset in(R.size());
    std::vector<Elem> work;
    auto push = [&](Elem x) {
        if (!in.test(x)) {
            in.set(x);
            work.push_back(x);
        }
    };
    push(FiniteRing::zero);
    push(R.one());
    seed.for_each([&](std::size_t i) { push(static_cast<Elem>(i)); });
    std::vector<Elem> members;
    while (!work.empty()) {
        Elem x = work.back();
        work.pop_back();
        members.push_back(x);
        for (Elem y : members) {
            push(R.add(x, y));
            push(R.add(y, x));
            push(R.mul(x, y));
            push(R.mul(y, x));
        }
    }
    return in;
}

// ---------------------------------------------------------------------------
// element-level queries

std::vector<Elem> units(const FiniteRing& R) { return R.unit_mask().to_elems(); }

bool is_left_invertible(const FiniteRing& R, Elem a) { return R.is_left_invertible(a); }

std::vector<Elem> central_idempotents(const FiniteRing& R) {
    std::vector<Elem> out;
    const std::size_t n = R.size();
    for (std::size_t e = 0; e < n; ++e) {
        Elem x = Elem(e);
        if (R.mul(x, x) != x) continue;
        bool central = true;
        for (std::size_t r = 0; r < n && central; ++r)
            central = R.mul(x, Elem(r)) == R.mul(Elem(r), x);
        if (central) out.push_back(x);
    }
    return out;
}

bool is_commutative(const FiniteRing& R) { return R.commutative(); }

unsigned additive_order(const FiniteRing& R, Elem a) {
    unsigned k = 1;
    Elem x = a;
    while (x != FiniteRing::zero) {
        x = R.add(x, a);
        ++k;
    }
    return k;
}

unsigned multiplicative_order(const FiniteRing& R, Elem u) {
    if (!R.is_unit(u)) throw PreconditionError("multiplicative_order: not a unit");
    unsigned k = 1;
    Elem x = u;
    while (x != R.one()) {
        x = R.mul(x, u);
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// axiom validation

void validate_ring_axioms(const FiniteRing& R, std::size_t exhaustive_limit,
                          std::size_t samples) {
    const std::size_t n = R.size();
    const Elem e1 = R.one();
    for (std::size_t a = 0; a < n; ++a) {
        if (R.add(0, Elem(a)) != Elem(a) || R.add(Elem(a), 0) != Elem(a))
            throw AxiomError("zero not neutral", {Elem(a)});
        if (R.mul(e1, Elem(a)) != Elem(a) || R.mul(Elem(a), e1) != Elem(a))
            throw AxiomError("unity not neutral", {Elem(a)});
        if (R.add(Elem(a), R.neg(Elem(a))) != 0)
            throw AxiomError("additive inverse missing", {Elem(a)});
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (R.add(Elem(a), Elem(b)) != R.add(Elem(b), Elem(a)))
                throw AxiomError("addition not commutative", {Elem(a), Elem(b)});

    auto check_triple = [&](Elem a, Elem b, Elem c) {
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
            throw AxiomError("addition not associative", {a, b, c});
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
            throw AxiomError("multiplication not associative", {a, b, c});
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
            throw AxiomError("left distributivity fails", {a, b, c});
        if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
            throw AxiomError("right distributivity fails", {a, b, c});
    };

    if (n <= exhaustive_limit) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) check_triple(Elem(a), Elem(b), Elem(c));
    } else {
        std::mt19937_64 rng(0xC0FFEE);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t i = 0; i < samples; ++i)
            check_triple(Elem(pick(rng)), Elem(pick(rng)), Elem(pick(rng)));
    }
}

}  // namespace comax
