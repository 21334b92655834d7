#pragma once

// Printed quotient matrices for A(n,3) and A(n,4), in the papers' cell order.
// Shared between the unit tests and the acceptance suite.

namespace testutil {

// cells: 111, 12, 3, 111', 21', 11'1', 12', 1'1'1', 1'2', 3'
inline const char* kQuotient3[10] = {
    "0 0 0 3n_3 0 0 0 0 0 0",
    "0 0 0 0 n_3 0 2n_3 0 0 0",
    "0 0 0 0 0 0 0 0 0 3n_3",
    "1 0 0 n_4 0 2n_4 2 0 0 0",
    "0 1 0 0 n_4 0 0 0 2n_4 2",
    "0 0 0 2 0 2n_5 2 n_5 2 0",
    "0 1 0 1 0 n_4 n_4 0 n_4 1",
    "0 0 0 0 0 3 0 3n_6 6 0",
    "0 0 0 0 1 1 1 n_5 2n-9 2",
    "0 0 1 0 1 0 1 0 2n_4 n_4",
};

// cells: 1111, 112, 22, 13, 4, 1111', 121', 31', 111'1', 21'1',
//        112', 22', 11'1'1', 11'2', 13', 1'1'1'1', 1'1'2', 2'2', 1'3', 4'
inline const char* kQuotient4[20] = {
    "0 0 0 0 0 4n_4 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 2n_4 0 0 0 2n_4 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 4n_4 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 n_4 0 0 0 0 0 0 3n_4 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 4n_4",
    "1 0 0 0 0 n_5 0 0 3n_5 0 3 0 0 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 n_5 0 0 n_5 0 1 0 2n_5 2 0 0 0 0 0",
    "0 0 0 1 0 0 0 n_5 0 0 0 0 0 0 0 0 0 0 3n_5 3",
    "0 0 0 0 0 2 0 0 2n_6 0 2 0 2n_6 4 0 0 0 0 0 0",
    "0 0 0 0 0 0 2 0 0 2n_6 0 2 0 0 0 0 2n_6 0 4 0",
    "0 1 0 0 0 1 0 0 n_5 0 n_5 0 0 2n_5 2 0 0 0 0 0",
    "0 0 1 0 0 0 1 0 0 n_5 0 n_5 0 0 0 0 0 2n_5 0 2",
    "0 0 0 0 0 0 0 0 3 0 0 0 3n_7 6 0 n_7 3 0 0 0",
    "0 0 0 0 0 0 1 0 1 0 1 0 n_6 2n-11 2 0 n_6 1 1 0",
    "0 0 0 1 0 0 1 0 0 0 1 0 0 2n_5 n_5 0 0 0 n_5 1",
    "0 0 0 0 0 0 0 0 0 0 0 0 4 0 0 4n_8 12 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0 1 2 0 n_7 3n-19 2 4 0",
    "0 0 0 0 0 0 0 0 0 0 0 2 0 2 0 0 2n_6 2n_6 2 2",
    "0 0 0 0 0 0 0 1 0 1 0 0 0 1 1 0 2n_6 1 2n-11 2",
    "0 0 0 0 1 0 0 1 0 0 0 1 0 0 1 0 0 n_5 2n_5 n_5",
};

}  // namespace testutil
