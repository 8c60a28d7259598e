#pragma once

#include <ratio>

// Exact rational constants of the self-similar fixed point, in units of the
// well depth (energies) or dimensionless (chi). Convert with to_double<>.

namespace ljfix::exact {

using ChiPlus = std::ratio<3, 8>;    // slope -1 bifurcation point
using ChiMinus = std::ratio<5, 8>;   // slope +1 bifurcation point
using ChiWell = std::ratio<1, 2>;    // well bottom
using FixedPoint = std::ratio<-15, 16>;
using DeepPoint = std::ratio<-17, 16>;
using WellBottom = std::ratio<-1>;
using Qiee = std::ratio<1, 8>;
using ShiftF = std::ratio<17, 16>;   // f' = f + 17/16
using LocalizedEnergy = std::ratio<20, 3>;  // E_c = kT_g*
using CriticalEnergy = std::ratio<8>;       // kT_c, van der Waals

// f(chi) = -4 chi (1 - chi) evaluated in rational arithmetic.
template <class Chi>
using FReduced = std::ratio_multiply<std::ratio<-4>,
                                     std::ratio_multiply<Chi, std::ratio_subtract<std::ratio<1>, Chi>>>;

template <class R>
constexpr double to_double() noexcept {
  return static_cast<double>(R::num) / static_cast<double>(R::den);
}

static_assert(std::ratio_equal_v<std::ratio_add<ChiPlus, ChiMinus>, std::ratio<1>>);
static_assert(std::ratio_equal_v<FReduced<ChiPlus>, FixedPoint>);
static_assert(std::ratio_equal_v<FReduced<ChiMinus>, FixedPoint>);
static_assert(std::ratio_equal_v<FReduced<ChiWell>, WellBottom>);
static_assert(std::ratio_equal_v<std::ratio_subtract<DeepPoint, FixedPoint>, std::ratio_subtract<std::ratio<0>, Qiee>>);
static_assert(std::ratio_equal_v<std::ratio_subtract<ChiMinus, ChiWell>, Qiee>);
static_assert(std::ratio_equal_v<std::ratio_subtract<ChiWell, ChiPlus>, Qiee>);
static_assert(std::ratio_less_v<LocalizedEnergy, CriticalEnergy>);

}  // namespace ljfix::exact
