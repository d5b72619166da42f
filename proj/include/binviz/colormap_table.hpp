// binviz - binary visualization toolkit
// Default entropy colormap table: 256 RGB entries, dark purple (index 0)
// through blue, teal and green to yellow (index 255). Generated by
// piecewise-linear interpolation between the five anchors
//   0:(68,1,84)  64:(59,82,139)  128:(33,145,140)  192:(94,201,98)  255:(253,231,37)
// with each channel rounded half away from zero. Checked in verbatim so
// rendered images are reproducible; tests re-derive it from the anchors.

#pragma once

#include <array>
#include <cstdint>

namespace binviz {

inline constexpr std::array<std::array<std::uint8_t, 3>, 256> default_colormap_table = {{
    {{ 68,   1,  84}}, {{ 68,   2,  85}}, {{ 68,   4,  86}}, {{ 68,   5,  87}},
    {{ 67,   6,  87}}, {{ 67,   7,  88}}, {{ 67,   9,  89}}, {{ 67,  10,  90}},
    {{ 67,  11,  91}}, {{ 67,  12,  92}}, {{ 67,  14,  93}}, {{ 66,  15,  93}},
    {{ 66,  16,  94}}, {{ 66,  17,  95}}, {{ 66,  19,  96}}, {{ 66,  20,  97}},
    {{ 66,  21,  98}}, {{ 66,  23,  99}}, {{ 65,  24,  99}}, {{ 65,  25, 100}},
    {{ 65,  26, 101}}, {{ 65,  28, 102}}, {{ 65,  29, 103}}, {{ 65,  30, 104}},
    {{ 65,  31, 105}}, {{ 64,  33, 105}}, {{ 64,  34, 106}}, {{ 64,  35, 107}},
    {{ 64,  36, 108}}, {{ 64,  38, 109}}, {{ 64,  39, 110}}, {{ 64,  40, 111}},
    {{ 64,  42, 112}}, {{ 63,  43, 112}}, {{ 63,  44, 113}}, {{ 63,  45, 114}},
    {{ 63,  47, 115}}, {{ 63,  48, 116}}, {{ 63,  49, 117}}, {{ 63,  50, 118}},
    {{ 62,  52, 118}}, {{ 62,  53, 119}}, {{ 62,  54, 120}}, {{ 62,  55, 121}},
    {{ 62,  57, 122}}, {{ 62,  58, 123}}, {{ 62,  59, 124}}, {{ 61,  60, 124}},
    {{ 61,  62, 125}}, {{ 61,  63, 126}}, {{ 61,  64, 127}}, {{ 61,  66, 128}},
    {{ 61,  67, 129}}, {{ 61,  68, 130}}, {{ 60,  69, 130}}, {{ 60,  71, 131}},
    {{ 60,  72, 132}}, {{ 60,  73, 133}}, {{ 60,  74, 134}}, {{ 60,  76, 135}},
    {{ 60,  77, 136}}, {{ 59,  78, 136}}, {{ 59,  79, 137}}, {{ 59,  81, 138}},
    {{ 59,  82, 139}}, {{ 59,  83, 139}}, {{ 58,  84, 139}}, {{ 58,  85, 139}},
    {{ 57,  86, 139}}, {{ 57,  87, 139}}, {{ 57,  88, 139}}, {{ 56,  89, 139}},
    {{ 56,  90, 139}}, {{ 55,  91, 139}}, {{ 55,  92, 139}}, {{ 55,  93, 139}},
    {{ 54,  94, 139}}, {{ 54,  95, 139}}, {{ 53,  96, 139}}, {{ 53,  97, 139}},
    {{ 53,  98, 139}}, {{ 52,  99, 139}}, {{ 52, 100, 139}}, {{ 51, 101, 139}},
    {{ 51, 102, 139}}, {{ 50, 103, 139}}, {{ 50, 104, 139}}, {{ 50, 105, 139}},
    {{ 49, 106, 139}}, {{ 49, 107, 139}}, {{ 48, 108, 139}}, {{ 48, 109, 139}},
    {{ 48, 110, 139}}, {{ 47, 111, 139}}, {{ 47, 112, 139}}, {{ 46, 113, 139}},
    {{ 46, 114, 140}}, {{ 46, 114, 140}}, {{ 45, 115, 140}}, {{ 45, 116, 140}},
    {{ 44, 117, 140}}, {{ 44, 118, 140}}, {{ 44, 119, 140}}, {{ 43, 120, 140}},
    {{ 43, 121, 140}}, {{ 42, 122, 140}}, {{ 42, 123, 140}}, {{ 42, 124, 140}},
    {{ 41, 125, 140}}, {{ 41, 126, 140}}, {{ 40, 127, 140}}, {{ 40, 128, 140}},
    {{ 40, 129, 140}}, {{ 39, 130, 140}}, {{ 39, 131, 140}}, {{ 38, 132, 140}},
    {{ 38, 133, 140}}, {{ 37, 134, 140}}, {{ 37, 135, 140}}, {{ 37, 136, 140}},
    {{ 36, 137, 140}}, {{ 36, 138, 140}}, {{ 35, 139, 140}}, {{ 35, 140, 140}},
    {{ 35, 141, 140}}, {{ 34, 142, 140}}, {{ 34, 143, 140}}, {{ 33, 144, 140}},
    {{ 33, 145, 140}}, {{ 34, 146, 139}}, {{ 35, 147, 139}}, {{ 36, 148, 138}},
    {{ 37, 149, 137}}, {{ 38, 149, 137}}, {{ 39, 150, 136}}, {{ 40, 151, 135}},
    {{ 41, 152, 135}}, {{ 42, 153, 134}}, {{ 43, 154, 133}}, {{ 43, 155, 133}},
    {{ 44, 156, 132}}, {{ 45, 156, 131}}, {{ 46, 157, 131}}, {{ 47, 158, 130}},
    {{ 48, 159, 130}}, {{ 49, 160, 129}}, {{ 50, 161, 128}}, {{ 51, 162, 128}},
    {{ 52, 163, 127}}, {{ 53, 163, 126}}, {{ 54, 164, 126}}, {{ 55, 165, 125}},
    {{ 56, 166, 124}}, {{ 57, 167, 124}}, {{ 58, 168, 123}}, {{ 59, 169, 122}},
    {{ 60, 170, 122}}, {{ 61, 170, 121}}, {{ 62, 171, 120}}, {{ 63, 172, 120}},
    {{ 64, 173, 119}}, {{ 64, 174, 118}}, {{ 65, 175, 118}}, {{ 66, 176, 117}},
    {{ 67, 177, 116}}, {{ 68, 177, 116}}, {{ 69, 178, 115}}, {{ 70, 179, 114}},
    {{ 71, 180, 114}}, {{ 72, 181, 113}}, {{ 73, 182, 112}}, {{ 74, 183, 112}},
    {{ 75, 184, 111}}, {{ 76, 184, 110}}, {{ 77, 185, 110}}, {{ 78, 186, 109}},
    {{ 79, 187, 109}}, {{ 80, 188, 108}}, {{ 81, 189, 107}}, {{ 82, 190, 107}},
    {{ 83, 191, 106}}, {{ 84, 191, 105}}, {{ 84, 192, 105}}, {{ 85, 193, 104}},
    {{ 86, 194, 103}}, {{ 87, 195, 103}}, {{ 88, 196, 102}}, {{ 89, 197, 101}},
    {{ 90, 198, 101}}, {{ 91, 198, 100}}, {{ 92, 199,  99}}, {{ 93, 200,  99}},
    {{ 94, 201,  98}}, {{ 97, 201,  97}}, {{ 99, 202,  96}}, {{102, 202,  95}},
    {{104, 203,  94}}, {{107, 203,  93}}, {{109, 204,  92}}, {{112, 204,  91}},
    {{114, 205,  90}}, {{117, 205,  89}}, {{119, 206,  88}}, {{122, 206,  87}},
    {{124, 207,  86}}, {{127, 207,  85}}, {{129, 208,  84}}, {{132, 208,  83}},
    {{134, 209,  83}}, {{137, 209,  82}}, {{139, 210,  81}}, {{142, 210,  80}},
    {{144, 211,  79}}, {{147, 211,  78}}, {{150, 211,  77}}, {{152, 212,  76}},
    {{155, 212,  75}}, {{157, 213,  74}}, {{160, 213,  73}}, {{162, 214,  72}},
    {{165, 214,  71}}, {{167, 215,  70}}, {{170, 215,  69}}, {{172, 216,  68}},
    {{175, 216,  67}}, {{177, 217,  66}}, {{180, 217,  65}}, {{182, 218,  64}},
    {{185, 218,  63}}, {{187, 219,  62}}, {{190, 219,  61}}, {{192, 220,  60}},
    {{195, 220,  59}}, {{197, 221,  58}}, {{200, 221,  57}}, {{203, 221,  56}},
    {{205, 222,  55}}, {{208, 222,  54}}, {{210, 223,  53}}, {{213, 223,  52}},
    {{215, 224,  52}}, {{218, 224,  51}}, {{220, 225,  50}}, {{223, 225,  49}},
    {{225, 226,  48}}, {{228, 226,  47}}, {{230, 227,  46}}, {{233, 227,  45}},
    {{235, 228,  44}}, {{238, 228,  43}}, {{240, 229,  42}}, {{243, 229,  41}},
    {{245, 230,  40}}, {{248, 230,  39}}, {{250, 231,  38}}, {{253, 231,  37}}
}};

} // namespace binviz
