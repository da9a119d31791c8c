import unittest

from nilpotra.hall.commutator import CommutatorTree, HallOrder, is_basic, nu
from nilpotra.word.word import Word, commutator_word

x1, x2, x3 = (CommutatorTree.leaf(g) for g in (1, 2, 3))


class TestCommutatorTree(unittest.TestCase):
    def test_leaf(self):
        self.assertTrue(x1.is_leaf)
        self.assertEqual(x1.weight, 1)
        self.assertEqual(x1.leaves, (1,))
        self.assertEqual(str(x1), "x1")

    def test_node(self):
        # Act
        tree = CommutatorTree.node(CommutatorTree.node(x2, x1), x1)

        # Assert
        self.assertFalse(tree.is_leaf)
        self.assertEqual(tree.weight, 3)
        self.assertEqual(tree.leaves, (2, 1, 1))
        self.assertEqual(str(tree), "[[x2,x1],x1]")
        self.assertEqual(tree, CommutatorTree.left_normed(2, 1, 1))

    def test_invalid_trees(self):
        with self.assertRaises(ValueError):
            CommutatorTree.leaf(0)
        with self.assertRaises(ValueError):
            CommutatorTree(left=x1)

    def test_relabel(self):
        tree = CommutatorTree.left_normed(2, 1, 1)
        self.assertEqual(str(tree.relabel({1: 3, 2: 5})), "[[x5,x3],x3]")

    def test_to_word(self):
        tree = CommutatorTree.node(x2, x1)
        self.assertEqual(
            tree.to_word(), commutator_word(Word.generator(2), Word.generator(1))
        )

    def test_nu_counts_leaves(self):
        tree = CommutatorTree.left_normed(2, 1, 1, 2)
        self.assertEqual(nu(tree, 1), 2)
        self.assertEqual(nu(tree, 2), 2)
        self.assertEqual(nu(tree, 3), 0)


class TestHallOrder(unittest.TestCase):
    def setUp(self):
        self.order = HallOrder(3)

    def test_weight_first(self):
        self.assertTrue(self.order.greater(CommutatorTree.node(x2, x1), x3))
        self.assertEqual(self.order.compare(x3, CommutatorTree.node(x2, x1)), -1)

    def test_leaves_by_index(self):
        self.assertTrue(self.order.greater(x2, x1))
        self.assertEqual(self.order.compare(x2, x2), 0)
        self.assertTrue(self.order.less_equal(x1, x1))

    def test_sorting_uses_the_order(self):
        trees = [CommutatorTree.node(x3, x1), x2, CommutatorTree.node(x2, x1), x1]
        self.assertEqual(
            [str(t) for t in sorted(trees)], ["x1", "x2", "[x2,x1]", "[x3,x1]"]
        )

    def test_rank_must_be_positive(self):
        with self.assertRaises(ValueError):
            HallOrder(0)


class TestIsBasic(unittest.TestCase):
    def setUp(self):
        self.order = HallOrder(3)

    def test_leaves_are_basic(self):
        self.assertTrue(is_basic(x1, self.order))

    def test_left_entry_must_be_greater(self):
        self.assertTrue(is_basic(CommutatorTree.node(x2, x1), self.order))
        self.assertFalse(is_basic(CommutatorTree.node(x1, x2), self.order))
        self.assertFalse(is_basic(CommutatorTree.node(x1, x1), self.order))

    def test_right_of_left_entry_bounded(self):
        self.assertTrue(is_basic(CommutatorTree.left_normed(2, 1, 2), self.order))
        self.assertFalse(is_basic(CommutatorTree.left_normed(3, 2, 1), self.order))
        self.assertTrue(is_basic(CommutatorTree.left_normed(3, 1, 2), self.order))

    def test_order_preserving_relabel_keeps_basic(self):
        # Arrange
        order = HallOrder(6)
        relabel = {1: 2, 2: 4, 3: 6}
        trees = [
            CommutatorTree.left_normed(2, 1, 2),
            CommutatorTree.left_normed(3, 2, 1),
            CommutatorTree.node(CommutatorTree.node(x3, x1), CommutatorTree.node(x2, x1)),
            CommutatorTree.node(CommutatorTree.node(x2, x1), CommutatorTree.node(x3, x1)),
        ]

        # Act & Assert
        for tree in trees:
            self.assertEqual(is_basic(tree, order), is_basic(tree.relabel(relabel), order))
