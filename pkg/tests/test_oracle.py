"""Tests for the dynamic-programming oracle and exhaustive enumeration."""

import unittest

from deutsch_paths.common.errors import InvalidSpecError
from deutsch_paths.oracle import (
    StripSpec,
    count_paths,
    count_series,
    count_table,
    count_walks,
    enumerate_paths,
)


class TestStripSpec(unittest.TestCase):
    def test_unbounded(self):
        spec = StripSpec(3, 7)
        self.assertFalse(spec.bounded)
        self.assertEqual(spec.describe(), "t=3, j=7, unbounded")
        self.assertEqual(StripSpec(1, 2, m=4).describe(), "t=1, j=2, upper boundary 3")

    def test_levels_outside_strip(self):
        with self.assertRaises(InvalidSpecError):
            StripSpec(3, 0, m=3)
        with self.assertRaises(InvalidSpecError):
            StripSpec(0, 3, m=3)

    def test_negative_levels(self):
        with self.assertRaises(InvalidSpecError):
            StripSpec(-1, 0)

    def test_empty_strip(self):
        with self.assertRaises(InvalidSpecError):
            StripSpec(0, 0, m=0)


class TestCountPaths(unittest.TestCase):
    def test_empty_path(self):
        self.assertEqual(count_paths(0, StripSpec(5, 5)), 1)
        self.assertEqual(count_paths(0, StripSpec(5, 4)), 0)

    def test_up_then_down(self):
        self.assertEqual(count_paths(2, StripSpec(0, 0)), 1)

    def test_three_steps_from_one(self):
        self.assertEqual(count_paths(3, StripSpec(1, 0)), 3)

    def test_height_one_strip(self):
        self.assertEqual(count_paths(2, StripSpec(0, 0, m=1)), 0)
        self.assertEqual(count_paths(0, StripSpec(0, 0, m=1)), 1)

    def test_unreachable_end_level(self):
        self.assertEqual(count_paths(1, StripSpec(0, 5)), 0)

    def test_negative_steps(self):
        with self.assertRaises(InvalidSpecError):
            count_paths(-1, StripSpec(0, 0))


class TestCountTable(unittest.TestCase):
    def test_unbounded_from_zero(self):
        table = count_table(5, 0)
        self.assertEqual(table.height, 5)
        self.assertEqual(table.rows, (
            (1, 0, 0, 0, 0, 0),
            (0, 1, 0, 0, 0, 0),
            (1, 0, 1, 0, 0, 0),
            (1, 2, 0, 1, 0, 0),
            (3, 2, 3, 0, 1, 0),
            (6, 7, 3, 4, 0, 1),
        ))

    def test_row_sums_are_motzkin(self):
        table = count_table(7, 0)
        self.assertEqual([table.row_sum(s) for s in range(8)], [1, 1, 2, 4, 9, 21, 51, 127])

    def test_first_row_is_start_indicator(self):
        table = count_table(3, 2, m=4)
        self.assertEqual(table.rows[0], (0, 0, 1, 0))

    def test_bounded_height(self):
        self.assertEqual(count_table(10, 1, m=3).height, 2)


class TestCountSeries(unittest.TestCase):
    def test_return_to_zero(self):
        self.assertEqual(count_series(StripSpec(0, 0), 6).to_counts(), [1, 0, 1, 1, 3, 6])

    def test_one_to_zero(self):
        self.assertEqual(count_series(StripSpec(1, 0), 5).to_counts(), [0, 1, 1, 3, 6])

    def test_height_two_strip(self):
        self.assertEqual(count_series(StripSpec(0, 0, m=2), 6).to_counts(), [1, 0, 1, 0, 1, 0])
        self.assertEqual(count_series(StripSpec(0, 1, m=2), 6).to_counts(), [0, 1, 0, 1, 0, 1])

    def test_invalid_order(self):
        with self.assertRaises(InvalidSpecError):
            count_series(StripSpec(0, 0), 0)


class TestEnumeration(unittest.TestCase):
    def test_empty_path(self):
        self.assertEqual(enumerate_paths(0, StripSpec(2, 2)), [()])

    def test_three_steps_from_one(self):
        self.assertEqual(
            enumerate_paths(3, StripSpec(1, 0)),
            [(1, 1, -3), (1, -1, -1), (-1, 1, -1)],
        )

    def test_unreachable(self):
        self.assertEqual(enumerate_paths(1, StripSpec(0, 5)), [])

    def test_strip_blocks_up_steps(self):
        for path in enumerate_paths(6, StripSpec(1, 1, m=3)):
            level, top = 1, 1
            for step in path:
                level += step
                top = max(top, level)
            self.assertLessEqual(top, 2)

    def test_guard(self):
        with self.assertRaises(InvalidSpecError):
            enumerate_paths(11, StripSpec(0, 0))

    def test_agrees_with_dp(self):
        for t in range(5):
            for j in range(5):
                for n in range(9):
                    spec = StripSpec(t, j)
                    self.assertEqual(len(enumerate_paths(n, spec)), count_paths(n, spec), (n, t, j))

    def test_agrees_with_dp_in_strip(self):
        for m in range(1, 5):
            for t in range(m):
                for j in range(m):
                    for n in range(9):
                        spec = StripSpec(t, j, m)
                        self.assertEqual(len(enumerate_paths(n, spec)), count_paths(n, spec), (n, m, t, j))


class TestProperties(unittest.TestCase):
    def test_monotone_in_upper_bound(self):
        order = 10
        for t in range(4):
            for j in range(4):
                unbounded = count_series(StripSpec(t, j), order).to_counts()
                previous = None
                for m in range(max(t, j) + 1, 12):
                    current = count_series(StripSpec(t, j, m), order).to_counts()
                    if previous is not None:
                        self.assertTrue(all(a <= b for a, b in zip(previous, current)))
                    self.assertTrue(all(a <= b for a, b in zip(current, unbounded)))
                    previous = current

    def test_stabilization(self):
        for t in range(4):
            for j in range(4):
                for n in range(8):
                    m = max(t + n + 1, j + 1)
                    self.assertEqual(count_paths(n, StripSpec(t, j, m)), count_paths(n, StripSpec(t, j)))

    def test_level_sum_conservation(self):
        for t in range(5):
            for n in range(9):
                total = sum(count_paths(n, StripSpec(t, j)) for j in range(t + n + 1))
                self.assertEqual(total, count_walks(n, t))


if __name__ == "__main__":
    unittest.main()
