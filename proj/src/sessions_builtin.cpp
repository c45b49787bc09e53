#include "codim1/runner.hpp"

namespace codim1 {

namespace {

const char* kEx1_1 = R"(# Quadric cone: the ruling ideal has height one but superheight two,
# exhibited by reducing onto a coordinate plane.
ring r = Q[R, S, T, Z]
algebra A = r / (R*S - T*Z) domain
ideal a in A = (R, T)
ring rp = Q[X, Y]
algebra P = rp / () domain factorial
map red : A -> P { R -> X, S -> 0, T -> Y, Z -> 0 }
witness w = map red height 2
task ledger a using w
)";

const char* kEx3_1_k1 = R"(# Complement of V(X1, X2) certified affine by a unity partition (k = 1).
ring r = Q[X1, X2, Y1, Y2]
algebra B = r / (X1*X2 + Y1*X1^2 + Y2*X2^2) domain
ideal a in B = (X1, X2)
certificate cert for a {
  section { (-Y1, X2), (X1 + Y2*X2, X1^2) }
  section { (-Y2, X1), (X2 + Y1*X1, X2^2) }
}
task ledger a using cert
)";

const char* kEx3_1_k2 = R"(# Complement of V(X1, X2) certified affine by a unity partition (k = 2).
ring r = Q[X1, X2, Y1, Y2]
algebra B = r / (X1^2*X2^2 + Y1*X1^3 + Y2*X2^3) domain
ideal a in B = (X1, X2)
certificate cert for a {
  section { (-Y1, X2^2), (X1^2 + Y2*X2, X1^3) }
  section { (-Y2, X1^2), (X2^2 + Y1*X1, X2^3) }
}
task ledger a using cert
)";

const char* kEx3_1_k3 = R"(# Complement of V(X1, X2) certified affine by a unity partition (k = 3).
ring r = Q[X1, X2, Y1, Y2]
algebra B = r / (X1^3*X2^3 + Y1*X1^4 + Y2*X2^4) domain
ideal a in B = (X1, X2)
certificate cert for a {
  section { (-Y1, X2^3), (X1^3 + Y2*X2, X1^4) }
  section { (-Y2, X1^3), (X2^3 + Y1*X1, X2^4) }
}
task ledger a using cert
)";

const char* kEx3_2_k1 = R"(# A small change in the relation destroys affineness: substituting
# Y1 -> -X2, Y2 -> 0 pushes (X1, X2) to height two in the plane (k = 1).
ring r = Q[X1, X2, Y1, Y2]
algebra B = r / (X1*X2 + Y1*X1 + Y2*X2^2) domain
ideal a in B = (X1, X2)
ring rt = Q[X1, X2]
algebra P = rt / () domain factorial
map phi : B -> P { X1 -> X1, X2 -> X2, Y1 -> -X2, Y2 -> 0 }
witness w = map phi height 2
task ledger a using w
)";

const char* kEx3_2_k2 = R"(# Substituting Y1 -> -X2^2, Y2 -> 0 pushes (X1, X2) to height two (k = 2).
ring r = Q[X1, X2, Y1, Y2]
algebra B = r / (X1^2*X2^2 + Y1*X1^2 + Y2*X2^3) domain
ideal a in B = (X1, X2)
ring rt = Q[X1, X2]
algebra P = rt / () domain factorial
map phi : B -> P { X1 -> X1, X2 -> X2, Y1 -> -X2^2, Y2 -> 0 }
witness w = map phi height 2
task ledger a using w
)";

const char* kMonomial2dim = R"(# Sign variant of the k = 1 unity partition.
ring r = Q[X1, X2, Y1, Y2]
algebra B = r / (X1*X2 - Y1*X1^2 - Y2*X2^2) domain
ideal a in B = (X1, X2)
certificate cert for a {
  section { (Y1, X2), (X1 - Y2*X2, X1^2) }
  section { (Y2, X1), (X2 - Y1*X1, X2^2) }
}
task ledger a using cert
)";

const char* kConeRuling = R"(# A1 cone as a monoid algebra; removing the ruling V(x1, x2) leaves an
# affine surface (the extended ideal has big height one upstairs).
monoid M = rank 2 generators (2, 0), (1, 1), (0, 2) positive normal
embedding e for M = split 0 2 images (2, 0), (1, 1), (0, 2) intersection
ideal a in M = (x1, x2)
task monoid-affine a via e
)";

const char* kConeVertex = R"(# A1 cone as a monoid algebra; removing the vertex V(x1, x3) does not
# leave an affine surface (big height two upstairs).
monoid M = rank 2 generators (2, 0), (1, 1), (0, 2) positive normal
embedding e for M = split 0 2 images (2, 0), (1, 1), (0, 2) intersection
ideal a in M = (x1, x3)
task monoid-affine a via e
)";

const char* kEx5_1 = R"(# Plane blown up in one point.  The exceptional curve E and a line C
# missing the point are disjoint, so their union disconnects and the
# complement cannot be affine.
lattice L = blowup 1
class E in L = E1 effective
class C in L = H effective
class through in L = H - E1 effective
config Yconf in L {
  component E coeff 1
  component C coeff 1
  test through not-in-support
}
task surface Yconf
)";

const char* kEx6_1 = R"(# Plane blown up in nine points on a smooth cubic.  The proper transform
# of the cubic has self-intersection zero and meets every listed curve,
# so the complement is non-affine of superheight one.
lattice L = blowup 9
class Y in L = 3*H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9 effective
class line in L = H effective
class exc1 in L = E1 effective
class exc2 in L = E2 effective
class exc3 in L = E3 effective
class exc4 in L = E4 effective
class exc5 in L = E5 effective
class exc6 in L = E6 effective
class exc7 in L = E7 effective
class exc8 in L = E8 effective
class exc9 in L = E9 effective
class conic in L = 2*H - E1 - E2 - E3 - E4 - E5 effective
config Yconf in L {
  component Y coeff 1
  test line not-in-support
  test exc1 not-in-support
  test exc2 not-in-support
  test exc3 not-in-support
  test exc4 not-in-support
  test exc5 not-in-support
  test exc6 not-in-support
  test exc7 not-in-support
  test exc8 not-in-support
  test exc9 not-in-support
  test conic not-in-support
  assume "the nine points admit no relation in the group law of the cubic"
}
task surface Yconf
)";

} // namespace

const std::vector<std::pair<std::string, std::string>>& builtin_sessions() {
    static const std::vector<std::pair<std::string, std::string>> sessions = {
        {"ex1_1", kEx1_1},
        {"ex3_1_k1", kEx3_1_k1},
        {"ex3_1_k2", kEx3_1_k2},
        {"ex3_1_k3", kEx3_1_k3},
        {"ex3_2_k1", kEx3_2_k1},
        {"ex3_2_k2", kEx3_2_k2},
        {"monomial_2dim", kMonomial2dim},
        {"cone_a1_ruling", kConeRuling},
        {"cone_a1_vertex", kConeVertex},
        {"ex5_1", kEx5_1},
        {"ex6_1", kEx6_1},
    };
    return sessions;
}

} // namespace codim1
