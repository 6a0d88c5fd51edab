/* Copyright 2026 The capheat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#pragma once

#include <array>

namespace capheat::fixtures {

// Tabulated Omega_i coefficients: {order i, power of q, power of nu, value}.
struct OmegaEntry {
  int order;
  int q_power;
  int nu_power;
  const char* value;
};

inline constexpr std::array<OmegaEntry, 117> kOmegaTable{{
    {1, 0, 1, "1/8"},
    {1, 0, 3, "-5/24"},
    {1, 1, 0, "1/24"},
    {1, 1, 1, "-1/4"},
    {1, 1, 3, "5/24"},
    {2, 0, 2, "1/16"},
    {2, 0, 4, "-3/8"},
    {2, 0, 6, "5/16"},
    {2, 1, 0, "1/16"},
    {2, 1, 2, "-9/16"},
    {2, 1, 4, "9/8"},
    {2, 1, 6, "-5/8"},
    {2, 2, 0, "-1/8"},
    {2, 2, 2, "9/16"},
    {2, 2, 4, "-3/4"},
    {2, 2, 6, "5/16"},
    {3, 0, 3, "25/384"},
    {3, 0, 5, "-531/640"},
    {3, 0, 7, "221/128"},
    {3, 0, 9, "-1105/1152"},
    {3, 1, 1, "9/128"},
    {3, 1, 3, "-71/48"},
    {3, 1, 5, "87/16"},
    {3, 1, 7, "-221/32"},
    {3, 1, 9, "1105/384"},
    {3, 2, 0, "7/960"},
    {3, 2, 1, "-19/32"},
    {3, 2, 3, "259/64"},
    {3, 2, 5, "-2949/320"},
    {3, 2, 7, "1105/128"},
    {3, 2, 9, "-1105/384"},
    {3, 3, 0, "-7/720"},
    {3, 3, 1, "19/32"},
    {3, 3, 3, "-259/96"},
    {3, 3, 5, "2949/640"},
    {3, 3, 7, "-221/64"},
    {3, 3, 9, "1105/1152"},
    {4, 0, 4, "13/128"},
    {4, 0, 6, "-71/32"},
    {4, 0, 8, "531/64"},
    {4, 0, 10, "-339/32"},
    {4, 0, 12, "565/128"},
    {4, 1, 2, "9/64"},
    {4, 1, 4, "-297/64"},
    {4, 1, 6, "1709/64"},
    {4, 1, 8, "-3681/64"},
    {4, 1, 10, "1695/32"},
    {4, 1, 12, "-565/32"},
    {4, 2, 0, "5/128"},
    {4, 2, 2, "-171/64"},
    {4, 2, 4, "3207/128"},
    {4, 2, 6, "-677/8"},
    {4, 2, 8, "2097/16"},
    {4, 2, 10, "-3051/32"},
    {4, 2, 12, "1695/64"},
    {4, 3, 0, "-5/16"},
    {4, 3, 2, "459/64"},
    {4, 3, 4, "-2613/64"},
    {4, 3, 6, "6415/64"},
    {4, 3, 8, "-7857/64"},
    {4, 3, 10, "2373/32"},
    {4, 3, 12, "-565/32"},
    {4, 4, 0, "5/16"},
    {4, 4, 2, "-153/32"},
    {4, 4, 4, "2613/128"},
    {4, 4, 6, "-1283/32"},
    {4, 4, 8, "2619/64"},
    {4, 4, 10, "-339/16"},
    {4, 4, 12, "565/128"},
    {5, 0, 5, "1073/5120"},
    {5, 0, 7, "-50049/7168"},
    {5, 0, 9, "186821/4608"},
    {5, 0, 11, "-44899/512"},
    {5, 0, 13, "82825/1024"},
    {5, 0, 15, "-82825/3072"},
    {5, 1, 3, "183/512"},
    {5, 1, 5, "-8613/512"},
    {5, 1, 7, "141923/1024"},
    {5, 1, 9, "-170509/384"},
    {5, 1, 11, "86067/128"},
    {5, 1, 13, "-248475/512"},
    {5, 1, 15, "414125/3072"},
    {5, 2, 1, "153/1024"},
    {5, 2, 3, "-38503/3072"},
    {5, 2, 5, "158319/1024"},
    {5, 2, 7, "-733859/1024"},
    {5, 2, 9, "2476075/1536"},
    {5, 2, 11, "-972981/512"},
    {5, 2, 13, "579775/512"},
    {5, 2, 15, "-414125/1536"},
    {5, 3, 0, "31/8064"},
    {5, 3, 1, "-1415/512"},
    {5, 3, 3, "65569/1024"},
    {5, 3, 5, "-116327/256"},
    {5, 3, 7, "10693979/7168"},
    {5, 3, 9, "-6031529/2304"},
    {5, 3, 11, "1302325/512"},
    {5, 3, 13, "-82825/64"},
    {5, 3, 15, "414125/1536"},
    {5, 4, 0, "-31/2016"},
    {5, 4, 1, "1893/256"},
    {5, 4, 3, "-39551/384"},
    {5, 4, 5, "539643/1024"},
    {5, 4, 7, "-9750567/7168"},
    {5, 4, 9, "1136471/576"},
    {5, 4, 11, "-209571/128"},
    {5, 4, 13, "745425/1024"},
    {5, 4, 15, "-414125/3072"},
    {5, 5, 0, "31/2520"},
    {5, 5, 1, "-631/128"},
    {5, 5, 3, "39551/768"},
    {5, 5, 5, "-539643/2560"},
    {5, 5, 7, "3250189/7168"},
    {5, 5, 9, "-162353/288"},
    {5, 5, 11, "209571/512"},
    {5, 5, 13, "-82825/512"},
    {5, 5, 15, "82825/3072"},
}};

}  // namespace capheat::fixtures
