// Frozen reference values for the test suite.
// Generated by tests/gen_oracle_values.py (mpmath, 200 decimal digits);
// independent of the library implementation. Do not edit by hand.
#pragma once

#include <cstdint>

namespace oracle {

inline constexpr char kPiDigits60Truncated[] = "314159265358979323846264338327950288419716939937510582097494";
inline constexpr char kPiRounded10[] = "3.141592654";

inline constexpr char kResidual3[] = "-0.1415926535897932384626434";     // 3 - pi
inline constexpr char kResidual355[] = "0.00003014435336405372129768942";  // 355 - 113*pi

inline constexpr char kSin1[] = "0.8414709848078965066525023";
inline constexpr char kSin355[] = "-0.00003014435335948844921433028";
inline constexpr char kSin103993[] = "-0.0000191293357784237502243072";

inline constexpr char kLemmaUpperSlackAt1[] = "0.1585290151921034933474977";
inline constexpr char kLemmaLowerSlackAt1[] = "0.2048512124403151635769673";

inline constexpr int kPiQuotients25[25] = {
    3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2, 1, 84, 2, 1, 1};

// First 21 convergents p_i / q_i of pi (index 0 is 3/1).
inline constexpr const char* kPiConvergentP[21] = {
    "3", "22", "333", "355", "103993", "104348", "208341", "312689", "833719", "1146408", "4272943", "5419351", "80143857", "165707065", "245850922", "411557987", "1068966896", "2549491779", "6167950454", "14885392687", "21053343141"};
inline constexpr const char* kPiConvergentQ[21] = {
    "1", "7", "106", "113", "33102", "33215", "66317", "99532", "265381", "364913", "1360120", "1725033", "25510582", "52746197", "78256779", "131002976", "340262731", "811528438", "1963319607", "4738167652", "6701487259"};

inline constexpr char kDelta22_7[] = "3.429288337";
inline constexpr char kDelta333_106[] = "2.014399061";
inline constexpr char kDelta355_113[] = "3.201958743";

// max delta over pi convergents with 2 <= q <= 10^6: argmax 22/7
inline constexpr char kMaxDeltaQ1e6[] = "3.429288337";
inline constexpr long kMaxDeltaQ1e6ArgP = 22;
inline constexpr long kMaxDeltaQ1e6ArgQ = 7;

inline constexpr char kTerm1_u3v2[] = "1.412282927437391914609335";
inline constexpr char kTerm2_u3v2[] = "0.1511813046328797398609692";
inline constexpr char kTerm3_u3v2[] = "1.859769198533656728185032";
inline constexpr char kTerm22_u3v2[] = "1.198717717715872833342436";
inline constexpr char kTerm355_u3v2[] = "24.59818122070685164975498";
inline constexpr char kTerm356_u3v2[] = "3.130076152988426161365461e-8";

inline constexpr char kTerm1_u1v2[] = "1.412282927437391914609335";

inline constexpr char kSum2_u3v2[] = "1.563464232070271654470304";
inline constexpr char kSum100_u3v2[] = "4.805693682088466260232473";
inline constexpr char kSum10000_u3v2[] = "30.31451083301389551269817";

inline constexpr long kSpikes400_u3v2_thr10[] = {355};
inline constexpr long kSpikes400_u3v2_thr1[] = {1, 3, 22, 355};
inline constexpr long kSpikes1e5_u3v2_thr1[] = {1, 3, 22, 355};
inline constexpr int kSpikes1e5Count = 4;

// term(p_i; 1,2) and term(p_i + 1; 1,2) for the first 10 convergents.
inline constexpr const char* kDiagAtP_u1v2[10] = {
    "16.7379227868029", "580.179375374482", "38.5925757738907", "3099985.78833958", "26278.2301644123", "78985.1561206518", "72898.9356248808", "380086.066666714", "224212.229485117", "2524824.6579242"};
inline constexpr const char* kDiagAtPPlus1_u1v2[10] = {
    "0.43649060256906", "0.0607162832312198", "0.00427703602289938", "0.00396693331325141", "1.3580760641823e-5", "1.35340343522471e-5", "6.77874669552783e-6", "4.51654247548751e-6", "1.69395854992203e-6", "1.23191798164651e-6"};

inline constexpr char kEnvelopeC_N100_mu2[] = "19.3596426771612";
inline constexpr long kEnvelopeArg_N100_mu2 = 22;
inline constexpr char kEnvelopeC_N1000_mu2[] = "4854.09771359938";
inline constexpr long kEnvelopeArg_N1000_mu2 = 355;

}  // namespace oracle
