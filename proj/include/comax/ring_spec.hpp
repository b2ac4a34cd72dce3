#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "comax/ring.hpp"

namespace comax {

// Ring construction grammar (whitespace-insensitive):
//   ring := "Z" int
//         | "GF(" int "," int ")" | "GF(" int ")"    (prime power shorthand)
//         | "M" int "(" ring ")"
//         | ring ("x" ring)+
//         | "table:" path
struct RingSpec {
    enum class Kind { zmod, gf, matrix, product, table };
    Kind kind = Kind::zmod;
    unsigned n = 0;      // zmod modulus / gf p / matrix dim
    unsigned k = 0;      // gf extension degree
    std::vector<RingSpec> children;
    std::string path;    // table file
};

RingSpec parse_ring_spec(std::string_view text);
std::string to_string(const RingSpec& spec);
RingPtr build_ring(const RingSpec& spec);
RingPtr build_ring(std::string_view text);

// Table-ring file format: {"size": n, "add": [[...]], "mul": [[...]]}.
RingPtr table_ring_from_json_text(const std::string& text, std::string label);
RingPtr load_table_ring(const std::string& path, std::string label = "");

// Ring of upper-triangular 2x2 matrices over GF(q), extracted as a subring
// of M2(GF(q)) and re-indexed through the table-ring path.
std::string t2_table_json_text(unsigned q);
RingPtr make_t2(unsigned q);

}  // namespace comax
