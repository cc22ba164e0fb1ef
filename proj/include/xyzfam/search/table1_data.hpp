#pragma once

// Known small solutions, as shipped in data/table1.csv.

#include <string_view>

namespace xyzfam {

inline constexpr std::string_view kTable1Csv =
    "1,3/2,4/3,1/6\n"
    "2,5/2,5/6,4/15\n"
    "3,1,1,1\n"
    "4,7/2,36/35,7/30\n"
    "5,4,1/2,1/2\n"
    "6,2,3/2,1/2\n"
    "7,10/3,21/20,5/12\n"
    "8,2,1,1\n"
    "9,2,2,1/2\n"
    "10,5/2,4/3,2/3\n"
    "11,2,11/6,2/3\n"
    "12,5/3,27/20,5/4\n"
    "13,3/2,3/2,4/3\n"
    "14,2,4/3,7/6\n"
    "15,3,1,1\n"
    "16,3,8/3,1/3\n"
    "17,5/2,10/7,34/35\n"
    "18,4,3/2,1/2\n"
    "19,3,3,1/3\n"
    "20,2,2,1\n"
    "21,5/2,5/2,3/5\n"
    "22,9/2,25/6,2/15\n"
    "23,5,9/10,23/30\n"
    "24,4,1,1\n"
    "25,4,9/4,5/12\n"
    "26,4,2,1/2\n"
    "27,9/4,25/12,16/15\n"
    "28,3,7/3,2/3\n"
    "29,4,29/20,4/5\n"
    "30,4,15/4,1/4\n"
    "31,8/3,31/12,3/4\n"
    "32,5,5/3,8/15\n"
    "33,2,2,3/2\n"
    "34,7/2,7/3,9/14\n"
    "35,3,3/2,4/3\n"
    "36,3,2,1\n"
    "37,20,37/15,1/30\n"
    "38,6,12/7,19/42\n"
    "39,4,3/2,1\n"
    "40,3,3,2/3\n"
    "41,3,25/12,16/15\n"
    "42,15/4,7/5,5/4\n"
    "43,9/2,2,2/3\n"
    "44,7,7/4,11/28\n"
    "45,4,3,1/2\n"
    "46,8,25/12,4/15\n"
    "47,25/6,32/15,3/4\n"
    "48,2,2,2\n"
    "49,6,3/2,2/3\n"
    "50,5,5/2,1/2\n"
    "51,4,17/12,4/3\n"
    "52,6,26/15,3/5\n"
    "53,7/2,7/2,4/7\n"
    "54,5,8/5,9/10\n"
    "55,5,11/3,1/3\n"
    "56,4,2,1\n"
    "57,16/5,25/8,4/5\n"
    "58,20/3,6/5,5/6\n"
    "59,5,49/30,20/21\n"
    "60,8,3/2,1/2\n"
    "61,32/3,9/2,1/12\n"
    "62,9/4,25/12,31/15\n"
    "63,3,3,1\n"
    "64,9,1,2/3\n"
    "65,3,13/6,3/2\n"
    "66,5/2,5/2,8/5\n"
    "67,15/2,32/15,5/12\n"
    "68,4,4,1/2\n"
    "69,13/4,13/4,23/26\n"
    "70,6,35/6,1/6\n"
    "71,10,49/20,8/35\n"
    "72,16,25/8,3/40\n"
    "73,6,6,1/6\n"
    "74,15/2,10/3,4/15\n"
    "75,4,5/2,1\n"
    "76,7/2,18/7,7/6\n"
    "77,5,16/5,11/20\n"
    "78,4,13/4,3/4\n"
    "79,8,25/12,9/20\n"
    "80,5,2,1\n"
    "81,9/2,4,1/2\n"
    "82,10/3,5/2,41/30\n"
    "83,5,5/2,4/5\n"
    "84,3,2,2\n"
    "85,9,16/9,17/36\n"
    "86,3,8/3,3/2\n"
    "87,9,25/3,1/15\n"
    "88,3,3,4/3\n"
    "89,27/2,2/3,2/3\n"
    "90,4,2,3/2\n"
    "91,4,9/4,4/3\n"
    "92,5,23/5,2/5\n"
    "93,11/2,11/2,3/11\n"
    "94,9/2,2,4/3\n"
    "95,5,4,1/2\n"
    "96,4,3,1\n"
    "97,10/3,49/20,45/28\n"
    "98,7/2,7/2,1\n"
    "99,5/2,5/2,11/5\n";

}  // namespace xyzfam
