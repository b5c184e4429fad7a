#pragma once

#include <string>

#include "polab/io.hpp"

#ifndef POLAB_FIXTURE_DIR
#define POLAB_FIXTURE_DIR "fixtures"
#endif

inline polab::Document fixture(const std::string& stem) {
    return polab::load_document(std::string(POLAB_FIXTURE_DIR) + "/" + stem + ".pol");
}

inline polab::Document doc(const std::string& text) { return polab::parse_document(text); }

// P copied into X and Y by identities, R = R_l
inline const char* kIdentityChain =
    "poset P { elems a b c; le a<b b<c; }\n"
    "poset X { elems a b c; le a<b b<c; }\n"
    "poset Y { elems a b c; le a<b b<c; }\n"
    "map eX { from P; to X; send names; }\n"
    "map eY { from P; to Y; send names; }\n"
    "polarity I { ex eX; ey eY; rel rl; }\n";
