#pragma once

#include "gyro/concepts.hpp"

namespace gyro {

/// gyr[a, b](z) = ⊖(a⊕b) ⊕ (a⊕(b⊕z)).
///
/// This is the single source of truth for gyrations. Closed forms supplied by
/// individual models are only ever compared against it.
template <GyroModel M>
element_t<M> gyr(const M& model, const element_t<M>& a, const element_t<M>& b,
                 const element_t<M>& z) {
    return model.add(model.negate(model.add(a, b)), model.add(a, model.add(b, z)));
}

/// ⊖a ⊕ b, the gyro-difference used by every metric construction.
template <GyroModel M>
element_t<M> gyro_difference(const M& model, const element_t<M>& a, const element_t<M>& b) {
    return model.add(model.negate(a), b);
}

template <GyroModel M>
bool equal(const M& model, const element_t<M>& a, const element_t<M>& b) {
    return model.residual(a, b) <= model.tolerance();
}

}  // namespace gyro
