#pragma once

#include "smsl/domains.hpp"
#include "smsl/synthesis.hpp"

#include <string>

namespace smsl::test {

inline const domains::DomainManifest& manifest(const std::string& name)
{
    static const auto hanoi = domains::hanoi();
    static const auto river = domains::river_crossing();
    static const auto chess = domains::chess();
    if (name == "hanoi")
        return hanoi;
    if (name == "chess")
        return chess;
    return river;
}

inline const FsmModel& fsm(const std::string& name)
{
    static const auto hanoi = synthesize(manifest("hanoi").spec);
    static const auto river = synthesize(manifest("river_crossing").spec);
    static const auto chess = synthesize(manifest("chess").spec);
    if (name == "hanoi")
        return hanoi;
    if (name == "chess")
        return chess;
    return river;
}

inline const char* const kBuiltins[] = {"hanoi", "river_crossing", "chess"};

} // namespace smsl::test
