// Generated by tools/golden_values.py; do not edit by hand.
#pragma once

#include <array>

namespace gkdv::golden {

struct GroundStateNorms {
  int k;
  double mass;      // |Q|_2^2
  double grad_sq;   // |Q'|_2^2
  double lkp2;      // |Q|_{k+2}^{k+2}
  double energy;    // focusing energy E(Q)
  double psi_mass;  // |psi|_2^2
};

inline constexpr int kMaxPower = 12;

inline constexpr std::array<GroundStateNorms, 12> kGroundState = {{
    {1, 6.0, 1.2, 7.2, -1.8, 4.1926274578121056808},
    {2, 4.0, 1.3333333333333333333, 5.3333333333333333333, -6.6666666666666666667e-1, 3.4641016151377545871},
    {3, 3.1769977022120650867, 1.3615704438051707514, 4.5385681460172358382, -2.2692840730086179191e-1, 3.0203263661014031971},
    {4, 2.7206990463513267759, 1.3603495231756633879, 4.0810485695269901638, -2.295887403949780289e-41, 2.7206990463513267759},
    {5, 2.4290032218172860996, 1.349446234342936722, 3.7784494561602228216, 1.349446234342936722e-1, 2.5041759803258667465},
    {6, 2.2258253490446107691, 1.3354952094267664615, 3.5613205584713772306, 2.2258253490446107691e-1, 2.3399866454989772661},
    {7, 2.0758641751145732513, 1.3210044750729102508, 3.3968686501874835022, 2.8307238751562362518e-1, 2.2109312501989190913},
    {8, 1.9604452840513078348, 1.3069635227008718899, 3.2674088067521797246, 3.2674088067521797246e-1, 2.1066355552267981329},
    {9, 1.8687449411150762929, 1.2937464976950528182, 3.162491438810129111, 3.5937402713751467171e-1, 2.0204656275037406494},
    {10, 1.7940497601481969208, 1.2814641143915692292, 3.07551387453976615, 3.8443923431747076875e-1, 1.9479781248687501481},
    {11, 1.7319713601701591418, 1.2701123307914500373, 3.0020836909616091791, 4.0412665070637046642e-1, 1.8860827398332575757},
    {12, 1.679518242379707635, 1.2596386817847807263, 2.9391569241644883613, 4.1987956059492690876e-1, 1.8325620513061814688},
}};

}  // namespace gkdv::golden
