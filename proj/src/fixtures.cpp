#include "fulleroct/goldberg.hpp"

#include <map>
#include <stdexcept>

namespace fulleroct {

namespace {

// 20:1: dodecahedron
const std::vector<std::vector<Vertex>> c20_1 = {{1,2,3},{4,5,0},{6,7,0},{0,8,9},{9,10,1},{1,11,6},{5,12,2},{2,13,8},
    {7,14,3},{3,15,4},{16,11,4},{10,17,5},{6,17,13},{12,18,7},{8,18,15},{14,16,9},
    {15,19,10},{19,12,11},{13,19,14},{18,17,16}};

// 24:1: hexagonal barrel, D6d
const std::vector<std::vector<Vertex>> c24_1 = {{1,2,3},{4,5,0},{6,7,0},{0,8,9},{10,11,1},{1,12,6},{5,13,2},{2,14,8},
    {7,15,3},{3,16,10},{9,17,4},{18,12,4},{11,19,5},{6,19,14},{13,20,7},{8,20,16},
    {15,21,9},{21,18,10},{17,22,11},{22,13,12},{14,23,15},{16,23,17},{23,19,18},{20,22,21}};

// 28:2: tetrahedral, Td
const std::vector<std::vector<Vertex>> c28_2 = {{1,2,3},{4,5,0},{6,7,0},{0,8,9},{9,10,1},{1,11,6},{5,12,2},{13,14,2},
    {3,14,15},{3,16,4},{17,18,4},{5,18,19},{6,19,13},{12,20,7},{8,7,21},{8,22,16},
    {15,17,9},{16,23,10},{24,11,10},{11,25,12},{13,26,21},{14,20,22},{21,27,15},{17,27,24},
    {23,25,18},{24,26,19},{20,25,27},{26,23,22}};

// 40:40: tetrahedral, Td
const std::vector<std::vector<Vertex>> c40_40 = {{1,2,3},{4,5,0},{6,7,0},{0,8,9},{10,11,1},{1,12,6},{5,13,2},{14,2,15},
    {3,14,16},{3,17,10},{9,18,4},{19,20,4},{21,5,20},{21,15,6},{22,8,7},{7,13,23},
    {8,24,17},{16,25,9},{10,26,19},{18,27,11},{12,11,28},{29,13,12},{30,24,14},{15,31,30},
    {22,32,16},{26,17,32},{33,18,25},{19,33,28},{20,27,34},{34,31,21},{23,35,22},{36,23,29},
    {25,24,37},{38,27,26},{28,39,29},{36,37,30},{39,35,31},{32,35,38},{37,39,33},{34,38,36}};

// 60:1812: truncated icosahedron, Ih
const std::vector<std::vector<Vertex>> c60_1812 = {{1,2,3},{4,5,0},{6,0,7},{0,8,9},{9,10,1},{11,1,12},{13,14,2},{2,11,15},
    {16,3,14},{3,17,4},{18,4,19},{20,7,5},{5,18,21},{15,22,6},{8,6,23},{7,24,13},
    {25,26,8},{27,9,26},{28,12,10},{10,27,29},{21,30,11},{12,31,20},{32,13,33},{14,32,25},
    {34,15,30},{23,35,16},{17,16,36},{37,19,17},{29,38,18},{19,39,28},{24,20,40},{41,21,38},
    {42,23,22},{22,34,43},{44,33,24},{45,25,46},{26,45,37},{36,47,27},{31,28,48},{49,29,47},
    {30,41,44},{50,40,31},{43,46,32},{33,51,42},{40,52,34},{53,36,35},{35,42,54},{39,37,55},
    {38,49,50},{56,48,39},{48,57,41},{58,43,52},{51,44,57},{54,55,45},{46,58,53},{47,53,56},
    {55,59,49},{52,50,59},{59,54,51},{57,56,58}};

const std::map<std::string_view, const std::vector<std::vector<Vertex>>*> table = {
    {"20:1", &c20_1},
    {"24:1", &c24_1},
    {"28:2", &c28_2},
    {"40:40", &c40_40},
    {"60:1812", &c60_1812},
};

}  // namespace

FullereneGraph named_fixture(std::string_view name) {
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown fixture " + std::string(name));
    return validate_fullerene(*it->second);
}

std::vector<std::string> fixture_names() {
    return {"20:1", "24:1", "28:2", "40:40", "60:1812"};
}

}  // namespace fulleroct
