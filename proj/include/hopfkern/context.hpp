#pragma once

// Per-algebra bundle of everything the kernel and central-structure layers
// consume: the verified algebra, its dual, both integrals, the irreducible
// data on both sides, and the integral pairing map. Built once, shared freely.

#include <memory>

#include "hopfkern/hopf.hpp"
#include "hopfkern/rep.hpp"

namespace hopfkern {

struct AlgebraContext {
    std::shared_ptr<const HopfAlgebraData> h;
    std::shared_ptr<const HopfAlgebraData> hd; // the dual on the dual basis
    Vec lambda;      // idempotent integral of H
    Vec lambda_dual; // idempotent integral of H* (an element of the dual)
    IrrData irr;     // Irr(H), blocks and characters over *h
    IrrData cochars; // Irr(H*): characters over *hd, i.e. element vectors in H
    Matrix phi;      // H* -> H, f -> f(S(Lambda_1)) Lambda_2

    const HopfAlgebraData& algebra() const { return *h; }
    const HopfAlgebraData& dual_algebra() const { return *hd; }

    static AlgebraContext make(HopfAlgebraData input) {
        AlgebraContext ctx;
        ctx.h = std::make_shared<const HopfAlgebraData>(std::move(input));
        require_verified(*ctx.h);
        ctx.hd = std::make_shared<const HopfAlgebraData>(dual(*ctx.h));
        ctx.lambda = integral(*ctx.h);
        ctx.lambda_dual = integral(*ctx.hd);
        ctx.irr = irr_characters(*ctx.h);
        ctx.cochars = irr_cocharacters(*ctx.hd);
        ctx.phi = phi_matrix(*ctx.h, ctx.lambda);
        return ctx;
    }
};

} // namespace hopfkern
