// Runtime ring selection: apply a generic callable to the concrete field
// context described by a RingDescriptor.

#ifndef QUINTIC_DISPATCH_HPP
#define QUINTIC_DISPATCH_HPP

#include <utility>

#include "quintic/ratfunc.hpp"
#include "quintic/rings.hpp"

namespace quintic {

template <class Fn>
auto with_field(const RingDescriptor& rd, Fn&& fn) {
    using Kind = RingDescriptor::Kind;
    switch (rd.kind) {
        case Kind::rational_field:
            return fn(QQ{});
        case Kind::prime_field:
            return fn(Fp(rd.p));
        case Kind::rational_function_field:
            if (rd.base == Kind::prime_field) return fn(Fpt(Fp(rd.p), rd.parameter));
            return fn(QQt(QQ{}, rd.parameter));
    }
    throw wrong_ring("bad ring descriptor");
}

}  // namespace quintic

#endif
