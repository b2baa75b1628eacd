#pragma once

#include "catalog.hpp"
#include "cobordism.hpp"
#include "document.hpp"
#include "error.hpp"
#include "froyshov.hpp"
#include "gen.hpp"
#include "graded.hpp"
#include "instance.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"
#include "sweep.hpp"
#include "tracer.hpp"
#include "cli.hpp"
