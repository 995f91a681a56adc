#pragma once

#include <string>
#include <vector>

#include "fgc/chords.hpp"
#include "fgc/report.hpp"
#include "fgc/trace.hpp"

namespace fgc {

// The forested graph (G_k, F_k): two horizontal paths of k-1 edges (the
// forest), each closed by an edge joining its ends, joined by k vertical
// edges. Trace = 4 * Theta_k for odd k.
ForestedGraph buildGk(int k);

// Theta_k: two vertices joined by k parallel edges, matching half orders.
OddGraph buildThetaK(int k);
// Complete graph on four vertices, all type A, ascending half orders.
OddGraph buildK4();

// The two traceless rank-4 companions of (G3, F3): d(G3,F') = C and
// d(G3,F'') = 4C - A mod IHX.
ForestedGraph buildFPrime();
ForestedGraph buildFDoublePrime();

// Type families for k = 5 (rank 6), one representative per diagram class:
// type one picks classes with a (1,3)-chord representative, type two the
// remaining classes with a (1,4) representative. Other odd k are permitted
// but only k = 5 is calibrated.
struct TypeFamilies {
  std::vector<ChordDiagram> typeOne, typeTwo;
  std::vector<ForestedGraph> typeOneGraphs, typeTwoGraphs;
};
TypeFamilies typeFamilies(int k);

ForestedGraph removeLeftChainEdge(const ChordDiagram& d);

// Form relators of the Prop 5.4 collapse: 2X + rho(X) for type one and
// Y + rho(Y) + Y_(34) - Y_(243) - Y_(23) for type two, with isolated-chord
// terms reduced away.
Chain typeOneFormRelator(const ChordDiagram& x);
Chain typeTwoFormRelator(const ChordDiagram& y);

struct CertificateOptions {
  std::string path;  // directory; empty = no emission
};

VerificationReport verifyMu3();
VerificationReport verifyMu5(const CertificateOptions& cert = {}, int threads = 1);
VerificationReport verifyH9(int threads = 1);

}  // namespace fgc
