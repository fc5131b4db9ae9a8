#ifndef KMBRAID_FACTORY_HPP
#define KMBRAID_FACTORY_HPP

#include "kmbraid/loop.hpp"

namespace kmbraid {

/// "A1".."A4", "B2".."B4", "C2".."C4", "D4", "G2" build finite Chevalley
/// algebras; "affine:<type>" the loop realization over the finite base.
std::shared_ptr<const ChevalleyAlgebra> make_finite(std::string_view spec);
std::shared_ptr<const AffineLoopAlgebra> make_affine(std::string_view finite_spec);
std::shared_ptr<const Algebra> make_algebra(std::string_view spec);

} // namespace kmbraid

#endif
