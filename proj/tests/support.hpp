#pragma once

#include "eulerfrac/numerics.hpp"

#include <doctest.h>

#include <string>

namespace testing {

// Reference values computed independently (mpmath, 45 digits).
namespace ref {
inline constexpr const char* log2 = "0.6931471805599453094172321214581765680755";
inline constexpr const char* log3_2 = "0.405465108108164381978013115464349136572";
inline constexpr const char* zeta3 = "1.202056903159594285399738161511449990765";
inline constexpr const char* zeta2_5 = "1.341487257250917179756769693348612136623";
inline constexpr const char* hurwitz_2_5_at_3_5 = "0.1261761306498315813559697227043555031896";
inline constexpr const char* li2_half = "0.5822405264650125059026563201596801087442";
inline constexpr const char* li3_half = "0.5372131936080402009406232255949658266704";
inline constexpr const char* li_5_2_at_3_10 = "0.3179489694783296339521410488246021865958";
inline constexpr const char* lerch_half_2_3 = "0.1579242117201000472212505612774408699536";
inline constexpr const char* euler_gamma = "0.5772156649015328606065120900824024310422";
inline constexpr const char* factorial_i0 = "0.5963473623231940743410784993692793760742";
inline constexpr const char* factorial_s_half_i0 = "0.4291604292587808568610438889305554044747";
inline constexpr const char* zeta3_r0 = "0.1680926274192925313168737211784692655829";
inline constexpr const char* log_r0 = "0.4426950408889634073599246810018921374266";
inline constexpr const char* gamma_r1 = "0.07922833326115704710904592702315571750006";
inline constexpr const char* polylog_r0 = "0.2824967439636115143682948476397038765102";
inline constexpr const char* gamma_half = "1.772453850905516027298167483341145182798";
inline constexpr const char* one_minus_49_6pi2 = "0.1725436669209081998749843837872242822811";
}  // namespace ref

inline eulerfrac::Real real(const char* text) { return eulerfrac::Real::parse(text, 45); }

inline double gap(const eulerfrac::Real& x, const char* expected) {
  return eulerfrac::abs(x - real(expected)).to_double();
}

inline double gap(const eulerfrac::Number& x, const char* expected) { return gap(x.to_real(45), expected); }

inline eulerfrac::Rational q(long p, long r = 1) {
  eulerfrac::Rational x(p, r);
  x.canonicalize();
  return x;
}

}  // namespace testing
