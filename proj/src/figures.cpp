#include "stereo/figures.hpp"

#include "stereo/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace stereo {

namespace {

struct RawEntry {
    const char* label;
    const char* boundary;   // KElement::parse form
    const char* sphere;     // SpherePoint::parse form
};

const std::vector<RawEntry>& raw_entries(SpaceCase space) {
    static const std::vector<RawEntry> s1_i = {
        {"0", "sqrt2*0/1", "(-1,0)/1"},
        {"1/sqrt2", "1/(sqrt2*1)", "(0,-1)/1"},
        {"2sqrt2/3", "sqrt2*2/3", "(3,-4)/5"},
        {"3/(2sqrt2)", "3/(sqrt2*2)", "(4,-3)/5"},
        {"sqrt2", "sqrt2*1/1", "(1,0)/1"},
        {"5/(2sqrt2)", "5/(sqrt2*2)", "(12,5)/13"},
        {"4sqrt2/3", "sqrt2*4/3", "(15,8)/17"},
        {"3/sqrt2", "3/(sqrt2*1)", "(4,3)/5"},
        {"5sqrt2/3", "sqrt2*5/3", "(21,20)/29"},
        {"7/(2sqrt2)", "7/(sqrt2*2)", "(20,21)/29"},
        {"2sqrt2", "sqrt2*2/1", "(3,4)/5"},
        {"inf", "inf", "(0,1)/1"},
    };
    static const std::vector<RawEntry> s1_ii = {
        {"0", "sqrt2*0/1", "(-1,1)/1"},
        {"1/sqrt2", "1/(sqrt2*1)", "(-1,-1)/1"},
        {"2sqrt2/3", "sqrt2*2/3", "(-1,-7)/5"},
        {"3/(2sqrt2)", "3/(sqrt2*2)", "(1,-7)/5"},
        {"sqrt2", "sqrt2*1/1", "(1,-1)/1"},
        {"5/(2sqrt2)", "5/(sqrt2*2)", "(17,-7)/13"},
        {"4sqrt2/3", "sqrt2*4/3", "(23,-7)/17"},
        {"3/sqrt2", "3/(sqrt2*1)", "(7,-1)/5"},
        {"5sqrt2/3", "sqrt2*5/3", "(41,-1)/29"},
        {"7/(2sqrt2)", "7/(sqrt2*2)", "(41,1)/29"},
        {"2sqrt2", "sqrt2*2/1", "(7,1)/5"},
        {"inf", "inf", "(1,1)/1"},
    };
    static const std::vector<RawEntry> s1_iii = {
        {"-2", "-2/1", "(-2,3,6)/7"},
        {"-1", "-1/1", "(-1,2,2)/3"},
        {"-1/2", "-1/2", "(-2,6,3)/7"},
        {"0", "0/1", "(0,1,0)/1"},
        {"1/3", "1/3", "(3,6,-2)/7"},
        {"1/2", "1/2", "(2,2,-1)/3"},
        {"2/3", "2/3", "(6,3,-2)/7"},
        {"1", "1/1", "(1,0,0)/1"},
        {"2", "2/1", "(2,-1,2)/3"},
        {"inf", "inf", "(0,0,1)/1"},
    };
    static const std::vector<RawEntry> s2_i = {
        {"0", "(0+0*w)/1", "(0,-1,0)/1"},
        {"1", "(1+0*w)/1", "(1,0,0)/1"},
        {"i", "(0+1*w)/1", "(-1,0,0)/1"},
        {"1+i", "(1+1*w)/1", "(0,1,0)/1"},
        {"1/(1-i)", "(1+1*w)/2", "(0,0,-1)/1"},
        {"inf", "inf", "(0,0,1)/1"},
    };
    static const std::vector<RawEntry> s2_ii = {
        {"0", "(0+0*w)/1", "(1,0,1)/1"},
        {"1", "(1+0*w)/1", "(1,1,0)/1"},
        {"w", "(0+1*w)/1", "(-1,0,1)/1"},
        {"1+w", "(1+1*w)/1", "(-1,1,0)/1"},
        {"-1/w", "(0+1*w)/2", "(0,-1,1)/1"},
        {"(-1+w)/w", "(2+1*w)/2", "(0,1,-1)/1"},
        {"1/(1-w)", "(1+1*w)/3", "(1,-1,0)/1"},
        {"w/(1+w)", "(2+1*w)/3", "(1,0,-1)/1"},
        {"(-1+w)/(1+w)", "(1+2*w)/3", "(-1,-1,0)/1"},
        {"2/(1-w)", "(2+2*w)/3", "(-1,0,-1)/1"},
        {"(1+w)/2", "(1+1*w)/2", "(0,-1,-1)/1"},
        {"inf", "inf", "(0,1,1)/1"},
    };
    static const std::vector<RawEntry> s2_iii = {
        {"0", "(0+0*w)/1", "(1,0,0,0)/1"},
        {"1", "(1+0*w)/1", "(0,1,0,0)/1"},
        {"1+w", "(1+1*w)/1", "(0,0,1,0)/1"},
        {"w", "(0+1*w)/1", "(1,-1,1,1)/2"},
        {"2+w", "(2+1*w)/1", "(-1,1,1,1)/2"},
        {"-w", "(0-1*w)/1", "(1,1,-1,1)/2"},
        {"1/(1-w)", "(2+1*w)/3", "(1,1,1,-1)/2"},
        {"inf", "inf", "(0,0,0,1)/1"},
    };
    switch (space) {
        case SpaceCase::S1_I: return s1_i;
        case SpaceCase::S1_II: return s1_ii;
        case SpaceCase::S1_III: return s1_iii;
        case SpaceCase::S2_I: return s2_i;
        case SpaceCase::S2_II: return s2_ii;
        case SpaceCase::S2_III: return s2_iii;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

const std::vector<FigureEntry>& figure_entries(SpaceCase space) {
    static std::map<SpaceCase, std::vector<FigureEntry>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(space);
    if (it != cache.end()) return it->second;

    const SpaceSpec& spec = space_spec(space);
    std::vector<FigureEntry> entries;
    for (const RawEntry& raw : raw_entries(space)) {
        FigureEntry e{raw.label, KElement::parse(spec.boundary_field, raw.boundary),
                      SpherePoint::parse(space, raw.sphere)};
        if (map_to_sphere(e.boundary, space, true) != e.sphere)
            throw invariant_violation("figure table entry '" + e.label +
                                      "' is not Phi of its boundary value");
        entries.push_back(std::move(e));
    }
    return cache.emplace(space, std::move(entries)).first->second;
}

std::string figure_table(SpaceCase space) {
    std::ostringstream out;
    for (const FigureEntry& e : figure_entries(space))
        out << e.label << "\t" << e.boundary.str() << "\t" << e.sphere.str() << "\n";
    return out.str();
}

std::string figure_json(SpaceCase space) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const FigureEntry& e : figure_entries(space)) {
        if (!first) out << ",";
        first = false;
        out << "{\"label\":\"" << e.label << "\",\"boundary\":\"" << e.boundary.str()
            << "\",\"point\":\"" << e.sphere.str() << "\"}";
    }
    out << "]";
    return out.str();
}

}  // namespace stereo
