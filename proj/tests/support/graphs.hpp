#pragma once
// Named edge-list fixtures shared by the unit and acceptance tests.

#include <string>

namespace graphs {

inline const std::string fig5 = "9 13\na c\nc d\nc e\nd e\nc f\nc g\nf g\nb c\nb h\nb i\nc h\nc i\nh i";
inline const std::string w2 = "4 5\nu v\nu a\nv a\nu b\nv b";
inline const std::string w3 = "5 7\nu v\nu a\nv a\nu b\nv b\nu c\nv c";
inline const std::string friendship3 = "7 9\nc a1\nc a2\na1 a2\nc b1\nc b2\nb1 b2\nc d1\nc d2\nd1 d2";
inline const std::string claw = "4 3\nv u1\nv u2\nv u3";
inline const std::string tp1_single = "4 4\nv x\nv y\nx y\nv p";
inline const std::string tpd1 = "5 6\nu v\nu a\nv a\nu b\nv b\nu p";
inline const std::string tpd2 = "6 7\nu v\nu a\nv a\nu b\nv b\nu p\nv q";
inline const std::string one_3wing = "5 5\nv x\nv y\nx y\nv a\na b";
inline const std::string p4 = "4 3\na b\nb c\nc d";
inline const std::string c4 = "4 4\na b\nb c\nc d\nd a";

/// Triangle abc with m1 plumes on a and m2 on b.
inline std::string tp2(int m1, int m2) {
  std::string body = "a b\nb c\na c";
  for (int i = 1; i <= m1; ++i) body += "\na p" + std::to_string(i);
  for (int i = 1; i <= m2; ++i) body += "\nb q" + std::to_string(i);
  return std::to_string(3 + m1 + m2) + " " + std::to_string(3 + m1 + m2) + "\n" + body;
}

}  // namespace graphs
