#pragma once

#include "gruc/field.hpp"

// Shared field contexts. Construction is cheap but these keep the frozen
// polynomials in one place.
inline const gruc::Field& f25() {
    static const gruc::Field f(2, 5, {1, 0, 1, 0, 0, 1});  // x^5 + x^2 + 1
    return f;
}

inline const gruc::Field& f35() {
    static const gruc::Field f(3, 5, {1, 2, 0, 0, 0, 1});  // 1 + 2x + x^5
    return f;
}

inline const gruc::Field& f27() {
    static const gruc::Field f(2, 7, {1, 1, 0, 0, 0, 0, 0, 1});  // x^7 + x + 1
    return f;
}

inline const gruc::Field& f29() {
    static const gruc::Field f(2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1});  // x^9 + x^4 + 1
    return f;
}
