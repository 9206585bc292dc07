#pragma once

#include <array>

namespace tfkac {
namespace golden {

/// Frozen reference errors for the example problems on the standard grids.
/// Layout per study: [metric][row][column] with rows the refinement levels
/// and columns the (gamma, lambda, p) points of the matching preset.
/// `convergence --check` and the acceptance suite compare against these.

using Block = std::array<std::array<double, 3>, 3>;

// example 1, FDM, fixed h = 1/2^11, tau in {1/2^7, 1/2^8, 1/2^9}
inline constexpr Block kTable1Hinf = {{{1.1075e-06, 1.2351e-06, 5.8745e-06},
                                       {5.5468e-07, 6.2154e-07, 2.9626e-06},
                                       {2.7751e-07, 3.1188e-07, 1.4869e-06}}};
inline constexpr Block kTable1H1 = {{{2.6618e-06, 3.5930e-06, 1.6728e-05},
                                     {1.3343e-06, 1.8094e-06, 8.4359e-06},
                                     {6.6784e-07, 9.0812e-07, 4.2324e-06}}};

// example 1, FDM, general-IC time scheme, same grids
inline constexpr Block kTable2Hinf = {{{1.6347e-05, 2.0377e-05, 6.9109e-05},
                                       {8.2423e-06, 1.0326e-05, 3.5002e-05},
                                       {4.1381e-06, 5.1977e-06, 1.7610e-05}}};
inline constexpr Block kTable2H1 = {{{4.6496e-05, 6.8074e-05, 1.9591e-04},
                                     {2.3450e-05, 3.4511e-05, 9.9249e-05},
                                     {1.1776e-05, 1.7378e-05, 4.9944e-05}}};

// example 1, FDM, tau = h^2, h in {1/2^4, 1/2^5, 1/2^6}
inline constexpr Block kTable3Hinf = {{{2.9913e-06, 6.6574e-06, 7.5610e-05},
                                       {7.4620e-07, 1.6625e-06, 1.8583e-05},
                                       {1.8646e-07, 4.1552e-07, 4.6304e-06}}};
inline constexpr Block kTable3H1 = {{{7.9241e-06, 2.1450e-05, 5.3436e-04},
                                     {1.9817e-06, 5.3784e-06, 1.3292e-04},
                                     {4.9547e-07, 1.3456e-06, 3.3188e-05}}};

inline constexpr Block kTable4Hinf = {{{1.1756e-05, 2.3316e-05, 2.7890e-04},
                                       {2.9399e-06, 5.8392e-06, 6.8873e-05},
                                       {7.3505e-07, 1.4606e-06, 1.7179e-05}}};
inline constexpr Block kTable4H1 = {{{2.9254e-05, 6.3071e-05, 1.4813e-03},
                                     {7.3311e-06, 1.5825e-05, 3.6924e-04},
                                     {1.8339e-06, 3.9600e-06, 9.2242e-05}}};

// example 1, FEM composite H1 error; first block tau = h, second tau = h^2
inline constexpr Block kTable5TauH = {{{3.1340e-04, 2.9617e-04, 2.8873e-03},
                                       {1.5555e-04, 1.4700e-04, 1.4190e-03},
                                       {7.7477e-05, 7.3149e-05, 7.0208e-04}}};
inline constexpr Block kTable5TauH2 = {{{3.0837e-04, 2.8818e-04, 2.7588e-03},
                                        {1.5410e-04, 1.4446e-04, 1.3844e-03},
                                        {7.7037e-05, 7.2275e-05, 6.9285e-04}}};

inline constexpr Block kTable6TauH = {{{3.1677e-03, 2.3810e-03, 9.9236e-03},
                                       {1.6769e-03, 1.2970e-03, 4.9773e-03},
                                       {8.6229e-04, 6.7730e-04, 2.4903e-03}}};
inline constexpr Block kTable6TauH2 = {{{3.5166e-03, 2.7857e-03, 9.8866e-03},
                                        {1.7676e-03, 1.4047e-03, 4.9619e-03},
                                        {8.8499e-04, 7.0384e-04, 2.4833e-03}}};

// example 2, FDM vs fine reference, final-time norms
inline constexpr Block kTable7Hinf = {{{2.1296e-04, 6.4417e-04, 2.6421e-03},
                                       {1.0480e-04, 3.1900e-04, 1.3162e-03},
                                       {5.0722e-05, 1.5484e-04, 6.4073e-04}}};
inline constexpr Block kTable7H1 = {{{4.7631e-04, 1.4418e-03, 5.9332e-03},
                                     {2.3441e-04, 7.1397e-04, 2.9557e-03},
                                     {1.1345e-04, 3.4655e-04, 1.4389e-03}}};

inline constexpr Block kTable8Hinf = {{{1.0019e-03, 1.1577e-03, 1.6511e-03},
                                       {2.4892e-04, 2.8575e-04, 3.8684e-04},
                                       {6.0962e-05, 6.8576e-05, 7.1566e-05}}};
inline constexpr Block kTable8H1 = {{{2.4312e-03, 2.7401e-03, 3.7190e-03},
                                     {6.0597e-04, 6.7931e-04, 8.7433e-04},
                                     {1.4917e-04, 1.6489e-04, 1.6538e-04}}};

// example 2, FEM self-refinement H1 errors
inline constexpr Block kTable9TauH = {{{6.8170e-02, 7.2097e-02, 8.0231e-02},
                                       {3.4093e-02, 3.6046e-02, 4.0452e-02},
                                       {1.7047e-02, 1.8021e-02, 2.0323e-02}}};
inline constexpr Block kTable9TauH2 = {{{6.8112e-02, 7.1635e-02, 7.5383e-02},
                                        {3.4072e-02, 3.5832e-02, 3.7672e-02},
                                        {1.7038e-02, 1.7918e-02, 1.8833e-02}}};

} // namespace golden
} // namespace tfkac
