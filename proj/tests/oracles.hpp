#pragma once
// generated by oracles/generate.py (mpmath, 40 digits)
#include <complex>

namespace oracle {

inline constexpr double kC1 = 0.90452423790027208147;
inline constexpr double kS1 = 0.31026830172338110181;
inline constexpr double kC4 = 0.59446032749782298179;
inline constexpr double kS4 = 0.74713384464811465620;
inline constexpr double kC10 = 0.60112518481344434813;
inline constexpr double kS10 = 0.58367089992962334216;
inline constexpr double kAi0 = 0.35502805388781723926;
inline constexpr double kAi1 = 0.13529241631288141552;
inline constexpr double kAi2 = 0.034924130423274379135;
inline constexpr double kAiM3 = -0.37881429367765807435;
inline constexpr double kAi5 = 0.00010834442813607441735;
inline const std::complex<double> kAi_1p1i{0.060458308371838149197, -0.15188956587718140235};
inline const std::complex<double> kAi_3p2i{-0.0096772010586102401542, 0.005524689111732705686};
inline const std::complex<double> kAi_m2p05i{0.29003094106266102693, 0.33030787622395855069};
inline const std::complex<double> kAi_6e30{0.00012599595061797120192, -0.00012247814984792698688};
inline const std::complex<double> kGamma_03p2i{0.05746533756958803346, -0.074984912582646138176};
inline const std::complex<double> kGamma_m15p05i{0.93791666278788505097, 0.34920566814780486859};
inline const std::complex<double> kGamma_205p10i{23477234814046731.311, -42802135479718911.166};
inline constexpr double kML_05_m2 = 0.25539567631050574387;
inline const std::complex<double> kML_075_1p1i{0.46575374801254033342, 2.9477660663121912663};
inline constexpr double kML_43_mquarter = 0.80497310026449253035;
inline constexpr double kW_mhalf_half_m1 = 0.43939128946772239705;
inline constexpr double kW_half_1_2 = 6.6906279405071441357;
inline constexpr double kM_third_15 = 0.26838912807998113923;
inline constexpr double kM_quarter_2 = 0.16125108345458585591;
inline const std::complex<double> kM_third_2e45{0.13770397381290709115, -0.3170872566678247708};
inline constexpr double kExpChirpTail = 0.17301129497681798487;
inline constexpr double kPowerChirpTail = 0.38568040512542921512;
inline constexpr double kSurvAbsorbing = 0.64261291485482052832;
inline constexpr double kSurvElastic_a0p5 = 1.0319046575593214663;
inline constexpr double kSurvElastic_a1 = 1.0178528050398809243;
inline constexpr double kSurvElastic_a2 = 0.94615577540953813556;
inline constexpr double kSurvElastic_a4 = 0.83030843864666408372;
inline constexpr double kSurvElastic_a8 = 0.74010142256066915533;
inline constexpr double kU23_x0 = 0.36924405581082415647;
inline constexpr double kU23_x0p5 = 0.36030674758855796424;
inline constexpr double kU23_x1 = 0.30909750824774156367;
inline constexpr double kU23_x2 = 0.081370273646254775284;
inline constexpr double kU23_x3 = -0.069500877445754345073;
inline constexpr double kU13_x0 = 0.44295335324741985522;
inline constexpr double kU13_x0p5 = 0.38703740921179001866;
inline constexpr double kU13_x1 = 0.26983007795222292147;
inline constexpr double kU13_x2 = 0.054277154126180787433;
inline constexpr double kU13_x3 = -0.025848584514760313916;
inline constexpr double kU04_x0 = 0.42946850961233372658;
inline constexpr double kU04_x0p5 = 0.38217142394947211221;
inline constexpr double kU04_x1 = 0.27556661614121848404;
inline constexpr double kU04_x2 = 0.058859184337262543978;
inline constexpr double kU04_x3 = -0.029723029625251025675;
inline constexpr double kU05_x0 = 0.40802446954913149054;
inline constexpr double kU05_x0p5 = 0.37459231476932776205;
inline constexpr double kU05_x1 = 0.28601746549961705384;
inline constexpr double kU05_x2 = 0.066323052169393498072;
inline constexpr double kU05_x3 = -0.038815394242296744551;
inline constexpr double kU05_t05_x1 = 0.29009343170884148204;
inline constexpr double kIter_n1_x0 = 0.44829000259976095485;
inline constexpr double kIter_n1_x1 = 0.34741249864918596147;
inline constexpr double kIter_n1_x2p5 = -0.13373345668699056518;
inline constexpr double kIter_n2_x0 = 0.53920954971571523609;
inline constexpr double kIter_n2_x1 = 0.32388219408735685809;
inline constexpr double kIter_n2_x2p5 = -0.13449188461594861753;
inline constexpr double kCyl2 = 0.62100511953158940576;

}  // namespace oracle
