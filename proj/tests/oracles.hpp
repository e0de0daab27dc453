// Reference values computed independently at high precision and frozen.
// Tests compare library output against these; they are not derived from
// the library itself.
#pragma once

#include <complex>

namespace oracle {

using cplx = std::complex<double>;

// Constants.
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kHalfLogPi = 0.57236494292470008707;
inline constexpr double kZetaPrime0 = -0.91893853320467274178;  // = -log(2*pi)/2
inline constexpr double kHarmonic10MinusLog10 = 0.62638316097420828424;

// Gamma / log-gamma / digamma.
inline constexpr double kGammaHalf = 1.7724538509055160273;
inline constexpr double kGamma2p5 = 1.3293403881791370205;
inline constexpr double kGamma0p6 = 1.48919224881281710239;
inline const cplx kGamma1pI{0.49801566811835604271, -0.15494982830181068512};
inline const cplx kGammaHalfP3I{0.0214456705524306460596, 0.00686536483726167791424};
inline const cplx kGamma4p2P1p3I{-0.985006378176943521586, 6.12955505204716913802};
inline constexpr double kLogGammaQuarter = 1.2880225246980774574;
inline constexpr double kLogGamma3Quarter = 0.20328095143129537148;
inline constexpr double kLogGamma1p5 = -0.12078223763524522235;
inline constexpr double kLogGamma3p7 = 1.42807232666538792187;
inline const cplx kLogGamma2p5P1p5I{-0.227112240793227322186, 1.17129293466460303398};
inline constexpr double kDigamma1p1 = -0.423754940411076795168;
inline constexpr double kDigamma1p5 = 0.036489973978576520559;
inline constexpr double kDigamma2p5 = 0.703156640645243187226;
inline constexpr double kDigamma4 = 1.25611766843180047273;
inline const cplx kDigamma1pI{0.0946503206224769772719, 1.07667404746858117413};

// Hurwitz zeta and its s-derivative.
inline const cplx kHz_2p5_1p5i_x1p25{0.515516371903882203596, -0.385584821445258928787};
inline const cplx kDhz_2p5_1p5i_x1p25{-0.0373148096137820562432, 0.220695901582461108284};
inline const cplx kHz_m4p5_2i_x0p7{-0.00239148477530564579995, -0.032657228009977074393};
inline const cplx kDhz_m4p5_2i_x0p7{-0.0394507486367396969389, -0.00186279674151966635146};
inline constexpr double kHz_3_x2p5 = 0.118102025820863701502;
inline constexpr double kDhz_3_x2p5 = -0.146304508487658017537;
inline constexpr double kDhz_m2_x1p5 = -0.150450452346191374269;
inline constexpr double kDhz_m2_x1 = -0.0304484570583932707803;
inline constexpr double kHz_m9p5_x0p3 = -0.00427438518536149737375;
inline constexpr double kDhz_m9p5_x0p3 = 0.0151911235890074543529;

// Prym decomposition, Bourget index, Hadamard interpolant.
inline constexpr double kPrymP2p5 = 0.20053759629003473411;
inline constexpr double kPrymQ2p5 = 1.1288027918891022864;
inline constexpr double kPrymQ0p5 = 0.2788055852806619765;
inline constexpr double kPrymPm0p5 = -3.7230554135925927448;
inline constexpr double kPrymPm2p5 = -1.0418653691142170415;
inline constexpr double kPrymQm2p5 = 0.096556648631275160264;
inline const cplx kPrymP1pI{0.21761827951010947309, -0.34159841985488064692};
inline constexpr double kBourgetT0p5 = 2.2906982523032382309;
inline constexpr double kHadamardHalf = 0.886226925452758013649;  // = sqrt(pi)/2

// Newton-series coefficient magnitude (index 64) of the log-factorial expansion.
inline constexpr double kHermiteC64 = 0.00351510818984;

// Zeros of the Prym polar part P.
inline const cplx kPrymZeroA{-1.7262976122899197704, 1.2380920473464962298};
inline const cplx kPrymZeroB{-3.7264730547153326186, 0.54067466847652411666};
inline constexpr double kPrymRealZeros[] = {
    -5.1190781392618441, -5.9715754332620017, -7.0043526283850716,
    -7.9993843167173161, -9.0000757070687637};

// Three-rung Richardson value of the rising product at s = 0.5 (n = 64,128,256),
// computed from exact rational products.
inline constexpr double kGaussExtrap3Rung0p5 = 1.7724537654017773;

}  // namespace oracle
