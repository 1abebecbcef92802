#pragma once

#include <string>

#include "analogy/algebra.hpp"

#ifndef ANALOGY_DATA_DIR
#define ANALOGY_DATA_DIR "data"
#endif

namespace fixtures {

// One of the bundled algebras by file stem, e.g. "A2" or "AABB".
inline analogy::AlgebraPtr bundled(const std::string& stem) {
    auto spec = analogy::load_spec_file(std::string(ANALOGY_DATA_DIR) + "/algebras/" + stem +
                                        ".alg");
    return spec.algebras.at(spec.algebra_order.front());
}

inline analogy::AlgebraPtr empty_language(const std::string& name, int size) {
    std::string text = "algebra " + name + " { universe: ";
    for (int i = 0; i < size; ++i)
        text += (i ? ", " : "") + std::string(1, static_cast<char>('a' + i));
    return analogy::load_algebra(text + "; }");
}

} // namespace fixtures
