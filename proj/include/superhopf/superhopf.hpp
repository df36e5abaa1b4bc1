#ifndef SUPERHOPF_SUPERHOPF_HPP
#define SUPERHOPF_SUPERHOPF_HPP

#include <superhopf/superpoly.hpp>
#include <superhopf/morphism.hpp>
#include <superhopf/presentation.hpp>
#include <superhopf/hopf.hpp>
#include <superhopf/comodule.hpp>
#include <superhopf/supergroup.hpp>
#include <superhopf/distlie.hpp>
#include <superhopf/random.hpp>
#include <superhopf/report.hpp>
#include <superhopf/scenario.hpp>
#include <superhopf/catalog.hpp>

#endif
