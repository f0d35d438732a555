#include "kedge/golden.hpp"

namespace kedge::golden {

const std::vector<Table1Column>& table1() {
  static const std::vector<Table1Column> t = {
      {14, 22, 324},   {16, 27, 603},   {18, 33, 1029},  {20, 38, 1657},  {22, 44, 2528},
      {23, 75, 3077},  {24, 51, 3699},  {25, 85, 4430},  {26, 57, 5250},  {27, 96, 6180},
  };
  return t;
}

const std::vector<Table2Column>& table2() {
  static const std::vector<Table2Column> t = {
      {28, 63, 64}, {29, 105, 107}, {30, 69, 72}, {31, 115, 118}, {32, 73, 79}, {33, 126, 130},
  };
  return t;
}

const std::vector<std::pair<std::int64_t, std::int64_t>>& section5() {
  static const std::vector<std::pair<std::int64_t, std::int64_t>> t = {
      {28, 7233},    {29, 8421},    {30, 9723},    {31, 11207},   {32, 12830},   {33, 14626},
      {34, 16613},   {35, 18796},   {36, 21164},   {37, 23785},   {38, 26621},   {39, 29691},
      {40, 33048},   {41, 36674},   {42, 40561},   {43, 44796},   {44, 49324},   {45, 54181},
      {46, 59410},   {47, 65015},   {48, 70948},   {49, 77362},   {50, 84146},   {51, 91374},
      {52, 99073},   {53, 107251},  {54, 115878},  {55, 125087},  {56, 134798},  {57, 145030},
      {58, 155900},  {59, 167344},  {60, 179354},  {61, 192095},  {62, 205437},  {63, 219457},
      {64, 234223},  {65, 249732},  {66, 265888},  {67, 282974},  {68, 300767},  {69, 319389},
      {70, 338913},  {71, 359311},  {72, 380531},  {73, 402798},  {74, 425980},  {75, 450078},
      {76, 475305},  {77, 501531},  {78, 528738},  {79, 557191},  {80, 586684},  {81, 617310},
      {82, 649190},  {83, 682308},  {84, 716507},  {85, 752217},  {86, 789077},  {87, 827289},
      {88, 866947},  {89, 907990},  {90, 950372},  {91, 994394},  {92, 1039840}, {93, 1086725},
      {94, 1135377}, {95, 1185551}, {96, 1237263}, {97, 1290844}, {98, 1346029}, {99, 1402932},
  };
  return t;
}

}  // namespace kedge::golden
