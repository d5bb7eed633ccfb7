#pragma once

// Matrices used across the test suites.

#include "regmat/gf2.hpp"
#include "regmat/matroid.hpp"

namespace regmat::fixtures {

// Fano plane, columns a..g.
inline Gf2Matrix fano_matrix() {
  return Gf2Matrix::from_rows({
      "1000111",
      "0101011",
      "0011101",
  });
}

// Rows r2, r1+r3, r2+r3 of the Fano matrix.
inline Gf2Matrix fano_matrix_alternative() {
  return Gf2Matrix::from_rows({
      "0101011",
      "1011010",
      "0110110",
  });
}

// Rows s1..s4 orthogonal to the Fano rows.
inline Gf2Matrix fano_dual_matrix() {
  return Gf2Matrix::from_rows({
      "0111000",
      "0110110",
      "1100010",
      "1110001",
  });
}

inline BinaryMatroid fano() { return BinaryMatroid(fano_matrix()); }
inline BinaryMatroid fano_dual() { return BinaryMatroid(fano_dual_matrix()); }

// Cycle matroid of K4: every nonzero vector of GF(2)^3 except 111.
inline BinaryMatroid k4() {
  return BinaryMatroid(Gf2Matrix::from_rows({
      "101010",
      "011001",
      "000111",
  }));
}

// Thirteen-element matroid on a,b,c,d,e,f,g,h,i,k,l,m,n given as (I_5 | A).
inline Gf2Matrix thirteen_matrix() {
  return Gf2Matrix::from_rows({
      "1000010110110",
      "0100010100011",
      "0010001010100",
      "0001000111011",
      "0000111101100",
  });
}

// Standard matrix A of the thirteen-element matroid (columns f..n).
inline Gf2Matrix thirteen_standard() {
  return Gf2Matrix::from_rows({
      "10110110",
      "10100011",
      "01010100",
      "00111011",
      "11101100",
  });
}

// A after the exchange of c and g; columns f,c,h,i,k,l,m,n, rows a,b,g,d,e.
inline Gf2Matrix thirteen_after_exchange() {
  return Gf2Matrix::from_rows({
      "10110110",
      "10100011",
      "01010100",
      "00111011",
      "11111000",
  });
}

// Standard matrix of M/{b,g} with respect to {a,d,e}; columns f,c,h,i,k,l,m,n.
inline Gf2Matrix thirteen_contracted_standard() {
  return Gf2Matrix::from_rows({
      "10110110",
      "00111011",
      "11111000",
  });
}

// Vertex-edge incidence (one vertex dropped) of the six-vertex, eight-edge graph
// with edges 1=RS 2=ST 3=TP 4=PQ 5=QR 6=RT 7=UR 8=TU; rows P,Q,R,S,T.
inline BinaryMatroid polygon_matroid() {
  return BinaryMatroid(Gf2Matrix::from_rows({
      "00110000",
      "00011000",
      "10001110",
      "11000000",
      "01100101",
  }));
}

}  // namespace regmat::fixtures
