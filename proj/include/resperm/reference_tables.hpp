#pragma once

// Reference data for the published exhaustive-search tables this library
// reproduces: known Type (iv) witness rows (Tables 1, 4, 5 layout) and the
// canonical family-list rows (Tables 2, 3 layout). Witness labels are kept
// as printed; rows containing a literal 0 use 0-based class labels, all
// others 1-based with label n meaning class 0. One misprint is corrected
// from the recomputed ground truth: the (p=937, A=314, k=469, n=8) row's
// witnesses are (2,2),(7,7).

#include <cstdint>
#include <utility>
#include <vector>

namespace resperm::golden {

struct WitnessRow {
    int n;
    std::uint64_t p;
    std::vector<std::int64_t> a_values;
    std::vector<std::uint64_t> k_values;
    std::vector<std::pair<int, int>> witness_labels;  // as printed
};

inline const std::vector<WitnessRow>& table1_rows() {
    static const std::vector<WitnessRow> rows = {
        {3, 83, {21, 26}, {81}, {{1, 1}}},
        {3, 89, {17, 21}, {23, 67}, {{1, 1}}},
        {3, 97, {17}, {47, 95}, {{2, 2}}},
        {3, 109, {44}, {53, 107}, {{2, 2}}},
        {3, 127, {45, 53}, {71}, {{2, 2}}},
        {4, 151, {2}, {13}, {{1, 4}, {2, 3}}},
        {4, 151, {46}, {127}, {{3, 1}, {4, 2}}},
        {4, 157, {64}, {155}, {{2, 2}, {3, 3}}},
        {4, 167, {83}, {165}, {{1, 1}, {2, 2}}},
        {4, 193, {16, 48}, {95}, {{2, 2}, {3, 3}}},
        {4, 193, {49}, {95}, {{2, 3}, {3, 2}}},
        {4, 271, {107}, {269}, {{1, 1}, {2, 2}}},
        {5, 479, {142}, {477}, {{2, 2}}},
        {5, 503, {25}, {65}, {{4, 4}}},
        {5, 503, {243}, {363}, {{4, 4}}},
        {5, 521, {215}, {259, 519}, {{3, 3}}},
        {5, 541, {176}, {269, 539}, {{3, 3}}},
        {5, 601, {59}, {251, 551}, {{3, 3}}},
        {6, 449, {158}, {447}, {{5, 5}, {6, 6}}},
        {6, 457, {137}, {151}, {{3, 3}, {4, 4}}},
        {6, 457, {162}, {227}, {{1, 1}, {6, 6}}},
        {6, 457, {80, 137}, {455}, {{3, 3}, {4, 4}}},
        {6, 479, {214}, {477}, {{5, 5}, {6, 6}}},
        {6, 547, {30}, {155}, {{3, 3}, {4, 4}}},
        {6, 571, {118}, {341}, {{3, 3}, {4, 4}}},
        {7, 1303, {347}, {1301}, {{4, 4}}},
        {7, 1321, {232}, {329, 989}, {{6, 6}}},
        {7, 1409, {416}, {703, 1407}, {{1, 1}}},
        {7, 1489, {653}, {371, 1115}, {{6, 6}}},
        {7, 1733, {670}, {865, 1731}, {{2, 2}}},
        {8, 1249, {36}, {623}, {{1, 1}, {8, 8}}},
        {8, 1301, {432}, {599}, {{5, 5}, {8, 8}}},
        {8, 1381, {648}, {1379}, {{5, 8}, {8, 5}}},
        {8, 1637, {437}, {1635}, {{6, 7}, {7, 6}}},
        {8, 1777, {176}, {1775}, {{3, 6}, {6, 3}}},
        {9, 2857, {1383}, {713, 2141}, {{2, 2}}},
        {9, 3037, {105}, {505, 2023}, {{2, 2}}},
        {9, 3067, {356}, {1871}, {{8, 8}}},
        {9, 3067, {1313}, {2363}, {{8, 8}}},
        {9, 3089, {482}, {1543, 3087}, {{1, 1}}},
        {9, 3433, {1590}, {571, 2287}, {{2, 2}}},
        {10, 2137, {830}, {1067}, {{8, 9}, {9, 8}}},
        {10, 2287, {109}, {2285}, {{1, 1}, {6, 6}}},
        {10, 2377, {623}, {2375}, {{0, 7}, {7, 0}}},
        {10, 2441, {1169}, {1829}, {{0, 0}, {1, 1}}},
        {10, 2473, {803}, {1235}, {{0, 3}, {3, 0}}},
        {11, 4787, {624}, {4785}, {{1, 1}}},
        {11, 4987, {2070}, {2215}, {{2, 2}}},
        {11, 5281, {964}, {2111, 4751}, {{6, 6}}},
        {11, 5683, {2390}, {5681}, {{9, 9}}},
        {11, 6577, {731, 3284}, {1645, 4933}, {{5, 5}}},
        {12, 3457, {1135}, {1727}, {{0, 1}, {1, 0}}},
        {12, 3529, {1485}, {1763}, {{0, 1}, {1, 0}}},
        {12, 3637, {993}, {3635}, {{0, 1}, {1, 0}}},
        {12, 3659, {934}, {3657}, {{0, 0}, {11, 11}}},
        {12, 3851, {9}, {351}, {{5, 6}, {6, 5}}},
    };
    return rows;
}

inline const std::vector<WitnessRow>& table4_rows() {
    static const std::vector<WitnessRow> rows = {
        {3, 13, {5}, {1}, {{2, 2}}},
        {4, 19, {7}, {1}, {{3, 4}, {4, 3}}},
        {4, 19, {8}, {1}, {{3, 3}, {4, 4}}},
        {5, 53, {14, 19}, {1}, {{4, 4}}},
        {6, 61, {16, 22}, {1}, {{2, 4}, {5, 3}}},
        {6, 61, {19}, {1}, {{3, 2}, {4, 5}}},
        {6, 61, {25}, {1}, {{3, 5}, {4, 2}}},
        {7, 131, {27, 34}, {1}, {{6, 6}}},
        {8, 151, {31, 39}, {1}, {{7, 8}, {8, 7}}},
        {9, 241, {35, 62}, {1}, {{8, 8}}},
        {10, 283, {48, 58}, {1}, {{4, 8}, {9, 5}}},
        {10, 283, {112}, {1}, {{5, 4}, {8, 9}}},
        {10, 283, {122}, {1}, {{5, 9}, {8, 4}}},
        {11, 449, {65, 76}, {1}, {{10, 10}}},
        {12, 491, {71, 83}, {1}, {{0, 11}, {11, 0}}},
    };
    return rows;
}

inline const std::vector<WitnessRow>& table5_rows() {
    static const std::vector<WitnessRow> rows = {
        {3, 17, {5}, {9}, {{2, 2}, {3, 3}}},
        {3, 17, {7}, {9}, {{2, 3}, {3, 2}}},
        {4, 61, {6}, {31}, {{1, 3}, {4, 2}}},
        {4, 61, {10}, {31}, {{2, 4}, {3, 1}}},
        {5, 137, {7}, {69}, {{3, 2}, {4, 5}}},
        {5, 137, {39}, {69}, {{2, 4}, {5, 3}}},
        {6, 197, {16}, {99}, {{1, 3}, {4, 2}}},
        {6, 197, {37}, {99}, {{2, 4}, {3, 1}}},
        {7, 277, {9, 56}, {139}, {{5, 4}, {6, 7}}},
        {7, 277, {62}, {139}, {{4, 5}, {7, 6}}},
        {7, 277, {67}, {139}, {{5, 7}, {6, 4}}},
        {7, 277, {94, 123}, {139}, {{4, 6}, {7, 5}}},
        {8, 937, {188}, {469}, {{2, 7}, {7, 2}}},
        {8, 937, {314}, {469}, {{2, 2}, {7, 7}}},
        {9, 653, {149}, {327}, {{1, 1}, {4, 4}}},
        {10, 2297, {768, 984}, {1149}, {{3, 4}, {4, 3}}},
        {11, 1061, {337}, {531}, {{5, 7}, {11, 9}}},
        {11, 1061, {488}, {531}, {{7, 5}, {9, 11}}},
        {12, 2857, {570, 817}, {1429}, {{4, 4}, {9, 9}}},
    };
    return rows;
}

inline const char* table2_row_text(int n) {
    switch (n) {
        case 3: return "1,2, (p−1)/2";
        case 4: return "1,2,3, (p−1)/2,(p±1)/3";
        case 5: return "1,2,3,4, (p−1)/2,(p−3)/2,(p±1)/3,(p±2)/3,(p±1)/4";
        case 6: return "1,2,3,4,5, (p−1)/2,(p−3)/2,(p±1)/3,(p±2)/3,(p±1)/4,(p±1)/5,(2p±1)/5";
        case 7: return "1,2,3,4,5,6, (p−1)/2,(p−3)/2,(p−5)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±1)/4,(p±3)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±1)/6";
        case 8: return "1,2,3,4,5,6,7, (p−1)/2,(p−3)/2,(p−5)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±5)/3,(p±1)/4,(p±3)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±3)/5,(2p±3)/5,(p±1)/6,(p±1)/7,(2p±1)/7,(3p±1)/7";
        case 9: return "1,2,3,4,5,6,7,8, (p−1)/2,(p−3)/2,(p−5)/2,(p−7)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±5)/3,(p±1)/4,(p±3)/4,(p±5)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±3)/5,(2p±3)/5,(p±4)/5,(2p±4)/5,(p±1)/6,(p±1)/7,(2p±1)/7,(3p±1)/7,(p±2)/7,(2p±2)/7,(3p±2)/7,(p±1)/8,(3p±1)/8";
        case 10: return "1,2,3,4,5,6,7,8,9, (p−1)/2,(p−3)/2,(p−5)/2,(p−7)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±5)/3,(p±7)/3,(p±1)/4,(p±3)/4,(p±5)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±3)/5,(2p±3)/5,(p±4)/5,(2p±4)/5,(p±1)/6,(p±1)/7,(2p±1)/7,(3p±1)/7,(p±2)/7,(2p±2)/7,(3p±2)/7,(p±3)/7,(2p±3)/7,(3p±3)/7,(p±1)/8,(3p±1)/8,(p±1)/9,(2p±1)/9,(4p±1)/9";
        case 11: return "1,2,3,4,5,6,7,8,9,10, (p−1)/2,(p−3)/2,(p−5)/2,(p−7)/2,(p−9)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±5)/3,(p±7)/3,(p±8)/3,(p±1)/4,(p±3)/4,(p±5)/4,(p±7)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±3)/5,(2p±3)/5,(p±4)/5,(2p±4)/5,(p±6)/5,(2p±6)/5,(p±1)/6,(p±5)/6,(p±1)/7,(2p±1)/7,(3p±1)/7,(p±2)/7,(2p±2)/7,(3p±2)/7,(p±3)/7,(2p±3)/7,(3p±3)/7,(p±4)/7,(2p±4)/7,(3p±4)/7,(p±1)/8,(3p±1)/8,(p±3)/8,(3p±3)/8,(p±1)/9,(2p±1)/9,(4p±1)/9,(p±2)/9,(2p±2)/9,(4p±2)/9,(p±1)/10,(3p±1)/10";
        case 12: return "1,2,3,4,5,6,7,8,9,10,11, (p−1)/2,(p−3)/2,(p−5)/2,(p−7)/2,(p−9)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±5)/3,(p±7)/3,(p±8)/3,(p±1)/4,(p±3)/4,(p±5)/4,(p±7)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±3)/5,(2p±3)/5,(p±4)/5,(2p±4)/5,(p±6)/5,(2p±6)/5,(p±7)/5,(2p±7)/5,(p±1)/6,(p±5)/6,(p±1)/7,(2p±1)/7,(3p±1)/7,(p±2)/7,(2p±2)/7,(3p±2)/7,(p±3)/7,(2p±3)/7,(3p±3)/7,(p±4)/7,(2p±4)/7,(3p±4)/7,(p±5)/7,(2p±5)/7,(3p±5)/7,(p±1)/8,(3p±1)/8,(p±3)/8,(3p±3)/8,(p±1)/9,(2p±1)/9,(4p±1)/9,(p±2)/9,(2p±2)/9,(4p±2)/9,(p±1)/10,(3p±1)/10,(p±1)/11,(2p±1)/11,(3p±1)/11,(4p±1)/11,(5p±1)/11";
        default: return nullptr;
    }
}

inline const char* table3_row_text(int n) {
    switch (n) {
        case 3: return "1,2, (p−1)/2";
        case 4: return "1";
        case 5: return "1,2,3,4, (p−1)/2,(p−3)/2,(p±1)/3,(p±2)/3,(p−1)/4";
        case 6: return "1,2,4, (p−1)/2,(p−1)/4";
        case 7: return "1,2,3,4,5,6, (p−1)/2,(p−3)/2,(p−5)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p−1)/4,(p+3)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±1)/6";
        case 8: return "1,2,3,5, (p−1)/2,(p−3)/2,(p±1)/3,(p±2)/3,(p±1)/5,(2p±1)/5";
        case 9: return "1,2,3,4,5,6,7,8, (p−1)/2,(p−3)/2,(p−5)/2,(p−7)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±5)/3,(p−1)/4,(p+3)/4,(p−5)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±3)/5,(2p±3)/5,(p±4)/5,(2p±4)/5,(p±1)/6,(p±1)/7,(2p±1)/7,(3p±1)/7,(p±2)/7,(2p±2)/7,(3p±2)/7,(p−1)/8,(3p+1)/8";
        case 10: return "1,2,3,4,6,7,8, (p−1)/2,(p−3)/2,(p−7)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p−1)/4,(p+3)/4,(p±1)/6,(p±1)/7,(2p±1)/7,(3p±1)/7,(p±2)/7,(2p±2)/7,(3p±2)/7,(p−1)/8,(3p+1)/8";
        case 11: return "1,2,3,4,5,6,7,8,9,10, (p−1)/2,(p−3)/2,(p−5)/2,(p−7)/2,(p−9)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±5)/3,(p±7)/3,(p±8)/3,(p−1)/4,(p+3)/4,(p−5)/4,(p+7)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±3)/5,(2p±3)/5,(p±4)/5,(2p±4)/5,(p±6)/5,(2p±6)/5,(p±1)/6,(p±5)/6,(p±1)/7,(2p±1)/7,(3p±1)/7,(p±2)/7,(2p±2)/7,(3p±2)/7,(p±3)/7,(2p±3)/7,(3p±3)/7,(p±4)/7,(2p±4)/7,(3p±4)/7,(p−1)/8,(3p+1)/8,(p+3)/8,(3p−3)/8,(p±1)/9,(2p±1)/9,(4p±1)/9,(p±2)/9,(2p±2)/9,(4p±2)/9,(p±1)/10,(3p±1)/10";
        case 12: return "1,2,3,4,5,7,8, (p−1)/2,(p−3)/2,(p−5)/2,(p−7)/2,(p±1)/3,(p±2)/3,(p±4)/3,(p±5)/3,(p−1)/4,(p+3)/4,(p−5)/4,(p+7)/4,(p±1)/5,(2p±1)/5,(p±2)/5,(2p±2)/5,(p±3)/5,(2p±3)/5,(p±4)/5,(2p±4)/5,(p±1)/7,(2p±1)/7,(3p±1)/7,(p±2)/7,(2p±2)/7,(3p±2)/7,(p±4)/7,(2p±4)/7,(3p±4)/7,(p−1)/8,(3p+1)/8";
        default: return nullptr;
    }
}

}  // namespace resperm::golden
