#include "lefschetz/jacobian.hpp"

namespace lefschetz {

template CiSpec jacobian_ideal<PrimeField>(const PrimeField&, const Form&);
template QCiSpec jacobian_ideal<RationalField>(const RationalField&, const QForm&);
template bool certify_smooth<PrimeField>(const PrimeField&, const Hypersurface&);
template bool certify_smooth<RationalField>(const RationalField&, const QHypersurface&);
template JacobianReport beauville_check<PrimeField>(const PrimeField&, const Hypersurface&,
                                                    const WlpOptions&);
template JacobianReport beauville_check<RationalField>(const RationalField&, const QHypersurface&,
                                                       const WlpOptions&);

}  // namespace lefschetz
