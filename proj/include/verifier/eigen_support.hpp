#pragma once

#include <Eigen/Core>

#include "verifier/quadext.hpp"
#include "verifier/rational.hpp"
#include "verifier/sparsepoly.hpp"

// NumTraits so dense Eigen types can be instantiated over the exact scalars.

namespace Eigen {

template <>
struct NumTraits<hv::BigRational> : GenericNumTraits<hv::BigRational> {
    typedef hv::BigRational Real;
    typedef hv::BigRational NonInteger;
    typedef hv::BigRational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<hv::QuadExt> : GenericNumTraits<hv::QuadExt> {
    typedef hv::QuadExt Real;
    typedef hv::QuadExt NonInteger;
    typedef hv::QuadExt Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 12,
        AddCost = 200,
        MulCost = 400
    };
    static inline Real epsilon() { return Real(0L); }
    static inline Real dummy_precision() { return Real(0L); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<hv::SparsePoly> : GenericNumTraits<hv::SparsePoly> {
    typedef hv::SparsePoly Real;
    typedef hv::SparsePoly NonInteger;
    typedef hv::SparsePoly Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 100,
        AddCost = 1000,
        MulCost = 10000
    };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
