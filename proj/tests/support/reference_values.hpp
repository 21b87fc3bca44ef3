#pragma once

// Reference values computed independently with mpmath at 50 decimal digits
// and frozen here. Tolerances in the tests reflect double rounding of the
// inputs plus the accumulation in each pipeline, not the oracle precision.

namespace refvals {

// Reference transceiver (the paper's Table I defaults).
inline constexpr double kWavelengthM = 1.55e-6;
inline constexpr double kWaistRadiusM = 1.25e-2;
inline constexpr double kApertureRadiusM = 0.2;
inline constexpr double kJitterRad = 8e-6;
inline constexpr double kResponsivityAW = 0.87;
inline constexpr double kNoiseVarianceA2 = 1.6e-14;
inline constexpr double kBandwidthHz = 1e9;
inline constexpr double kTargetRateBps = 1e9;
inline constexpr double kTransmitPowerDbm = 28.0;

// --- beam optics -------------------------------------------------------
// Spot radius w(l) = w0 sqrt(1 + (lambda l / (pi w0^2))^2).
inline constexpr double kRayleighDistanceM = 316.692807822;  // pi w0^2 / lambda
inline constexpr double kSpotAtRayleighM = 0.017677669529663688;  // w0 sqrt(2)
inline constexpr double kSpotAt4085kmM = 161.23669023207345;      // l = 4.085e6

// Aperture channel at l = 4.085e6 m, a = 0.2 m (round Iridium-like range).
inline constexpr double kRef4085DistanceM = 4.085e6;
inline constexpr double kRef4085ApertureRatio = 0.0015546264755392369;
inline constexpr double kRef4085PeakGain = 3.0772411968019612e-6;
inline constexpr double kRef4085EquivBeamM = 161.23682012783603;
inline constexpr double kRef4085Gamma2 = 6.0856134344854726;

// Aperture channel at the Starlink adjacent-slot chord distance.
inline constexpr double kStarlinkIntraChordM = 1969921.991379;
inline constexpr double kStarlinkChordApertureRatio = 0.0032238073981552106;
inline constexpr double kStarlinkChordPeakGain = 1.3232603049480529e-5;
inline constexpr double kStarlinkChordEquivBeamM = 77.753930331796886;
inline constexpr double kStarlinkChordGamma2 = 6.0856459148289298;

// Low-gamma regime (wide waist, long range, strong jitter): gamma^2 < 1,
// where the gain density is unbounded as the gain goes to zero.
inline constexpr double kLowGammaWaistM = 0.02;
inline constexpr double kLowGammaApertureM = 0.1;
inline constexpr double kLowGammaDistanceM = 5.0e6;
inline constexpr double kLowGammaJitterRad = 2.0e-5;
inline constexpr double kLowGammaDisplacementM = 500.0;
inline constexpr double kLowGammaPeakGain = 1.3145769620971084e-6;
inline constexpr double kLowGammaEquivBeamM = 123.34512496760712;
inline constexpr double kLowGammaGamma2 = 0.38035049633186544;
inline constexpr double kLowGammaNu = 12.5;
inline constexpr double kLowGammaCdfAt0p3 = 0.99998961640379736;   // h = 0.3 A0
inline constexpr double kLowGammaCdfAt1em3 = 0.99784177958219829;  // h = 1e-3 A0
inline constexpr double kLowGammaCdfAt0p9 = 0.99999981403130908;   // h = 0.9 A0

// --- gain CDF series at the l = 4.085e6 channel ------------------------
// (displacement s [m], gain fraction h/A0, CDF)
struct SeriesRef {
    double displacement_m;
    double gain_fraction;
    double cdf;
};
inline constexpr SeriesRef kSeriesRefs[] = {
    {0.0, 0.5, 0.014724746074764652},
    {100.0, 0.5, 0.62797552987075426},
    {100.0, 0.1, 0.017428153972708506},
    {32.68, 0.9, 0.66964504261622555},  // nu = 0.5 (to oracle precision of s)
    {300.0, 0.01, 0.96024979803207789},
};
inline constexpr double kNuAtS100 = 4.6817250921;  // s = 100 m at this channel

// --- truncation (term tolerance 1e-12) ----------------------------------
struct TruncationRef {
    double nu;
    int n_terms;
};
inline constexpr TruncationRef kTruncationRefs[] = {
    {1e-6, 2}, {0.1, 8}, {1.0, 15}, {4.68, 30}, {20.0, 76}, {100.0, 295},
};

// --- link budget ---------------------------------------------------------
inline constexpr double kPowerAt28DbmW = 0.63095734448019325;
inline constexpr double kThresholdGainAt28Dbm = 2.3043091201253898e-7;
inline constexpr double kSnrAtGain3p08em6 = 178.65696648168245;  // h = 3.08e-6, 28 dBm

// Analytic outage, Starlink intra chord geometry, s = 0, 22 dBm.
inline constexpr double kStarlinkChordOutageAt22Dbm = 8.832835746e-8;
// Transmit power [dBm] with analytic outage exactly 1e-8 (same geometry).
inline constexpr double kStarlinkChordCrossingDbm = 23.5546421328;
// Same with the computed motion-induced misalignment applied.
inline constexpr double kStarlinkChordCrossingMisDbm = 24.5605853972;

// --- orbital geometry ----------------------------------------------------
inline constexpr double kOmegaAt7159137kmRadS = 0.0010422643371094107;  // r = 7.159137e6

// Wavefront arrival time and beam-center displacement per link
// (distance [m], arrival time [s], displacement [m]); chord geometry,
// receiver trailing in plane / lower-RAAN plane across planes.
struct LinkRef {
    double distance_m;
    double tau_s;
    double displacement_m;
};
inline constexpr LinkRef kIridiumIntra = {4029902.49306, 0.01344198661452, 28.27126579219};
inline constexpr LinkRef kIridiumInter = {3702147.621146, 0.01234901656757, 92.02105459329};
inline constexpr LinkRef kStarlinkIntra = {1969921.991379, 0.006570787825584, 7.096451008229};
inline constexpr LinkRef kStarlinkInter = {603779.559911, 0.002013961174029, 12.21289532631};
inline constexpr double kStarlinkIntraNu = 0.101385160051;

// Along-orbit arc spacings [m] (mean Earth radius 6371 km).
inline constexpr double kIridiumIntraArcM = 4085212.847;
inline constexpr double kIridiumInterArcM = 3744778.44308;
inline constexpr double kStarlinkIntraArcM = 1976632.97777;
inline constexpr double kStarlinkInterArcM = 603971.187653;

// --- RNG -----------------------------------------------------------------
// PCG32 reference sequence for seed 42, stream 54 (O'Neill's demo vector).
inline constexpr unsigned int kPcg32Demo[] = {0xa15c02b7u, 0x7b47f409u, 0xba1d3330u,
                                              0x83d2f293u, 0xbfa4784bu, 0xcbed606eu};

}  // namespace refvals
