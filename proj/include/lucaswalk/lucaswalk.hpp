#pragma once

#include <lucaswalk/bounds.hpp>
#include <lucaswalk/core.hpp>
#include <lucaswalk/exact.hpp>
#include <lucaswalk/report.hpp>
#include <lucaswalk/rigidity.hpp>
#include <lucaswalk/sequence.hpp>
#include <lucaswalk/stepper.hpp>
#include <lucaswalk/verify.hpp>
#include <lucaswalk/walker.hpp>
