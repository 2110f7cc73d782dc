#pragma once

#include <array>
#include <string_view>

// Coefficients of mu*Q_j on P2Q3, P3Q2, P3Q1, P1Q3, P1Q2, P2Q1 for the 49-point
// configuration, known up to one common unit. Columns: cubic mu in lex order,
// Q index fastest.
inline constexpr std::array<std::array<std::string_view, 6>, 30> kKleinReferenceTable{{
    {{"0", "0", "0", "0", "15c-6", "2c+12"}},  // x^3*Q1
    {{"0", "0", "0", "0", "0", "0"}},  // x^3*Q2
    {{"2c+12", "15c-6", "0", "0", "0", "0"}},  // x^3*Q3
    {{"0", "0", "5c-2", "5c-2", "0", "0"}},  // x^2y*Q1
    {{"15c-6", "15c-6", "0", "0", "0", "0"}},  // x^2y*Q2
    {{"0", "0", "0", "0", "0", "0"}},  // x^2y*Q3
    {{"0", "0", "0", "0", "0", "0"}},  // x^2z*Q1
    {{"0", "0", "0", "0", "15c-6", "2c+12"}},  // x^2z*Q2
    {{"0", "0", "-8c+16", "5c-2", "0", "0"}},  // x^2z*Q3
    {{"0", "0", "0", "0", "5c-2", "5c-2"}},  // xy^2*Q1
    {{"0", "0", "0", "0", "0", "0"}},  // xy^2*Q2
    {{"15c-6", "15c-6", "0", "0", "0", "0"}},  // xy^2*Q3
    {{"5c-2", "5c-2", "0", "0", "0", "0"}},  // xyz*Q1
    {{"0", "0", "5c-2", "5c-2", "0", "0"}},  // xyz*Q2
    {{"0", "0", "0", "0", "5c-2", "5c-2"}},  // xyz*Q3
    {{"0", "0", "0", "0", "2c+12", "15c-6"}},  // xz^2*Q1
    {{"0", "0", "0", "0", "0", "0"}},  // xz^2*Q2
    {{"5c-2", "-8c+16", "0", "0", "0", "0"}},  // xz^2*Q3
    {{"0", "0", "2c+12", "-12c-72", "0", "0"}},  // y^3*Q1
    {{"-12c-72", "2c+12", "0", "0", "0", "0"}},  // y^3*Q2
    {{"0", "0", "0", "0", "0", "0"}},  // y^3*Q3
    {{"0", "0", "0", "0", "0", "0"}},  // y^2z*Q1
    {{"0", "0", "0", "0", "5c-2", "5c-2"}},  // y^2z*Q2
    {{"0", "0", "15c-6", "15c-6", "0", "0"}},  // y^2z*Q3
    {{"0", "0", "15c-6", "15c-6", "0", "0"}},  // yz^2*Q1
    {{"5c-2", "5c-2", "0", "0", "0", "0"}},  // yz^2*Q2
    {{"0", "0", "0", "0", "0", "0"}},  // yz^2*Q3
    {{"0", "0", "0", "0", "0", "0"}},  // z^3*Q1
    {{"0", "0", "0", "0", "2c+12", "15c-6"}},  // z^3*Q2
    {{"0", "0", "15c-6", "2c+12", "0", "0"}},  // z^3*Q3
}};
