#pragma once

#include <swag/chunked_deque.hpp>
#include <swag/daba.hpp>
#include <swag/daba_lite.hpp>
#include <swag/engine.hpp>
#include <swag/errors.hpp>
#include <swag/fixup.hpp>
#include <swag/monoid.hpp>
#include <swag/monoids.hpp>
#include <swag/timestamped.hpp>
#include <swag/two_stacks.hpp>
#include <swag/two_stacks_lite.hpp>
