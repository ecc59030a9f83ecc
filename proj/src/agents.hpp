#pragma once

#include <memory>

#include "vanetsim/routing.hpp"

namespace vanetsim::detail {

std::unique_ptr<RoutingAgent> make_dsdv_agent(const ProtocolTimers& timers, RouterEnv& env);
std::unique_ptr<RoutingAgent> make_olsr_agent(const ProtocolTimers& timers, RouterEnv& env);
std::unique_ptr<RoutingAgent> make_dymo_agent(const ProtocolTimers& timers, RouterEnv& env);

} // namespace vanetsim::detail
