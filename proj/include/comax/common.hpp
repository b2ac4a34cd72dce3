#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace comax {

// Element id within a ring. Id 0 is always the additive identity and id 1
// the multiplicative identity (for rings with at least two elements).
using Elem = std::uint16_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed ring spec, table file, or argument. CLI exit code 2.
class InvalidSpecError : public Error {
public:
    using Error::Error;
};

// Construction would exceed the configured element cap. CLI exit code 3.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

// Operation precondition violated (e.g. quotient by a non-two-sided ideal).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A ring axiom failed during table validation; carries the witness elements.
class AxiomError : public Error {
public:
    AxiomError(std::string axiom, std::vector<Elem> witness);
    const std::string& axiom() const { return axiom_; }
    const std::vector<Elem>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<Elem> witness_;
};

// A computation contradicts one of the theorems the toolkit verifies.
class FalsificationError : public Error {
public:
    using Error::Error;
};

// Global element cap for ring constructors. Default 4096; the COMAX_SIZE_CAP
// environment variable overrides the default at first use.
std::size_t size_cap();
void set_size_cap(std::size_t cap);

bool is_prime(unsigned n);
// If n = p^e with p prime and e >= 1, fills p/e (when non-null) and returns true.
bool is_prime_power(unsigned n, unsigned* p = nullptr, unsigned* e = nullptr);
std::vector<unsigned> distinct_prime_factors(unsigned n);

}  // namespace comax
