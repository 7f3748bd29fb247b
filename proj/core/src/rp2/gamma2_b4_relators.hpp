#pragma once

// Gamma2(B_4) on letter generators, one entry per relator.
namespace fpg::rp2 {

inline constexpr char const* kGamma2B4Relators[] = {
    "Z2 X2^-1 Z1^-1",
    "X2 Z1 Z2^-1",
    "Z4 X4^-1 Z3^-1",
    "X4 Z3 Z4^-1",
    "Y2 Y1^-1 X2^-1 Y1^-1",
    "X2 Y1 X2 Y2^-2",
    "Y4 Y3^-1 X4^-1 Y3^-1",
    "X4 Y3 X4 Y4^-2",
    "Y1 Z2 Y1 Z1^-1 Y2^-1 Z1^-1",
    "Y2 Z1 Y2 Z2^-1 Y1^-1 Z2^-1",
    "Y3 Z4 Y3 Z3^-1 Y4^-1 Z3^-1",
    "Y4 Z3 Y4 Z4^-1 Y3^-1 Z4^-1",
    "C2 X4^-1 C1^-1",
    "X2 C1 C2^-1",
    "C4 X2^-1 C3^-1",
    "X4 C3 C4^-1",
    "D2 X4^-1 D1^-1",
    "X2 D1 D2^-1",
    "D4 X2^-1 D3^-1",
    "X4 D3 D4^-1",
    "Y1 Y4^-1 A1^-1",
    "Y2 A1 Y3^-1",
    "Y3 A4 Y2^-1 A3^-1",
    "Y4 A3 Y1^-1 A4^-1",
    "Y1 D2 Y4^-1 D1^-1",
    "Y2 D1 Y3^-1 D2^-1",
    "Y3 D4 Y2^-1 D3^-1",
    "Y4 D3 Y1^-1 D4^-1",
    "Z1 Z4^-1 A1^-1",
    "Z2 A1 Z3^-1",
    "Z3 A4 Z2^-1 A3^-1",
    "Z4 A3 Z1^-1 A4^-1",
    "Z1 B2 Z4^-1 B1^-1",
    "Z2 B1 Z3^-1 B2^-1",
    "Z3 B4 Z2^-1 B3^-1",
    "Z4 B3 Z1^-1 B4^-1",
    "B1 X4 X2",
    "B2 A1^-1",
    "X4^-1 A4 X2^-1 B3^-1",
    "A3 B4^-1",
    "Y2^-1 B2 Y4^-1 C1^-1",
    "Y1^-1 B1 Y3^-1 C2^-1",
    "Y4^-1 B4 Y2^-1 C3^-1",
    "Y3^-1 B3 Y1^-1 C4^-1",
    "Z1^-1 C1 Z3^-1 D2^-1",
    "Z2^-1 C2 Z4^-1 D1^-1",
    "Z3^-1 C3 Z1^-1 D4^-1",
    "Z4^-1 C4 Z2^-1 D3^-1",
    "B4^-1 A1^-1 B1 A4 X2^-1",
    "B2 A3 X2^-1 B3^-1",
    "B2^-1 A3^-1 B3 X4^-1",
    "B1^-1 A4^-1 B4 A1 X4^-1",
    "C4^-1 B1^-1 C1 B4 Y2^-1 Y1^-1",
    "C3^-1 B2^-1 C2 B3 Y1^-1 Y2^-1",
    "C2^-1 B3^-1 C3 B2 Y4^-1 Y3^-1",
    "C1^-1 B4^-1 C4 B1 Y3^-1 Y4^-1",
    "D4^-1 C1^-1 D1 C4 Z2^-1 Z1^-1",
    "D3^-1 C2^-1 D2 C3 Z1^-1 Z2^-1",
    "D2^-1 C3^-1 D3 C2 Z4^-1 Z3^-1",
    "D1^-1 C4^-1 D4 C1 Z3^-1 Z4^-1",
    "Y2 Z1 Z2 Y1 X2 A4^-1 A1^-1",
    "X2 Y1 Z2 Z1 Y2 X2 A3^-1",
    "Y4 Z3 Z4 Y3 X4 A3^-1",
    "X4 Y3 Z4 Z3 Y4 A1^-1 A4^-1",
};

}  // namespace fpg::rp2
