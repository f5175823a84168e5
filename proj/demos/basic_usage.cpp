// Tour of the library API: classify a vector set, construct extensions,
// classify projective point sets, and cross-check against GL exhaustion.

#include <iostream>

#include "permext/permext.hpp"

using namespace permext;

int main() {
    const FieldSpec f5 = FieldSpec::prime_field(5);

    // x1, x2, -(x1 + x2): every permutation extends to an invertible map
    const VectorSet negsum(f5, 2,
                           {Vector::from_ints(f5, {1, 0}), Vector::from_ints(f5, {0, 1}),
                            Vector::from_ints(f5, {-1, -1})});
    const LinearClass cls = classify_linear(negsum);
    std::cout << "negative-sum set classifies as " << to_string(cls.kind) << "\n";

    const Permutation swap_ends({2, 1, 0});
    if (auto u = extend_permutation_linear(negsum, swap_ends))
        std::cout << "swap of the outer vectors extends to " << u->to_string() << "\n";

    // a dependent set that is not homogeneous: the first blocked transposition
    const VectorSet skew(f5, 2,
                         {Vector::from_ints(f5, {1, 0}), Vector::from_ints(f5, {0, 1}),
                          Vector::from_ints(f5, {1, 1})});
    const LinearClass bad = classify_linear(skew);
    std::cout << "skew set classifies as " << to_string(bad.kind) << " with witness "
              << bad.witness->to_string() << "\n";

    // the harmonic quadruple over GF(3) is fully extendable in PGL
    const FieldSpec f3 = FieldSpec::prime_field(3);
    const ProjSet harmonic = ProjSet::from_vectors(
        f3, 2,
        {Vector::from_ints(f3, {1, 0}), Vector::from_ints(f3, {0, 1}),
         Vector::from_ints(f3, {1, 1}), Vector::from_ints(f3, {1, 2})});
    std::cout << "harmonic quadruple over GF(3) classifies as "
              << to_string(classify_projective(harmonic).kind) << "\n";

    // exhaustive certification of the projective classification over P(GF(3)^2)
    const SweepReport report = exhaustive_theorem2_check(2, 3, 6);
    std::cout << "sweep over P(GF(3)^2): " << report.subsets_checked << " subsets, "
              << report.discrepancies.size() << " discrepancies\n";
    return 0;
}
