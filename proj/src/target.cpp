#include "cyfeyn/target.hpp"

#include <numeric>
#include <string>

#include "cyfeyn/errors.hpp"

namespace cyfeyn {

TargetSpec make_target(int k) {
    TargetSpec t;
    t.k = k;
    switch (k) {
    case 6:
        t.weights = {1, 1, 1, 1, 2};
        t.r0 = Rat(13, 36);
        t.r1 = Rat(5, 162);
        t.a0 = Rat(1, 2);
        t.a1 = Rat(-7, 4);
        t.chi = -204;
        break;
    case 8:
        t.weights = {1, 1, 1, 1, 4};
        t.r0 = Rat(11, 32);
        t.r1 = Rat(105, 4096);
        t.a0 = Rat(1, 3);
        t.a1 = Rat(-11, 6);
        t.chi = -296;
        break;
    case 10:
        t.weights = {1, 1, 1, 2, 5};
        t.r0 = Rat(3, 10);
        t.r1 = Rat(189, 10000);
        t.a0 = Rat(1, 6);
        t.a1 = Rat(-17, 12);
        t.chi = -288;
        break;
    default:
        throw UnsupportedTarget("make_target: unsupported degree k=" + std::to_string(k) +
                                " (supported: 6, 8, 10)");
    }

    // r = k^k / prod w^w and p_k = k / prod w, derived from the weights.
    Int num = 1;
    for (int i = 0; i < k; ++i) num *= k;
    Int den = 1;
    Int wprod = 1;
    int wsum = 0;
    for (int w : t.weights) {
        for (int i = 0; i < w; ++i) den *= w;
        wprod *= w;
        wsum += w;
    }
    if (wsum != k)
        throw UnsupportedTarget("make_target: weights do not sum to k");
    t.r = Rat(num, den);
    t.r.canonicalize();
    t.p_k = Rat(Int(k), wprod);
    t.p_k.canonicalize();
    return t;
}

} // namespace cyfeyn
