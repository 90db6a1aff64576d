#pragma once

// 81 rows (periods 0..80) of frozen interval-recurrence constants, columns
// c_l_1, c_u_1, c_l_3, c_u_3, c_l_5, c_u_5.
extern const double kReferenceTable[81][6];
