"""nilpotra - Normal forms and automorphisms of free nilpotent groups.

This package provides:
1. Words over x1..xn and their grammar (nilpotra.word)
2. Hall bases of basic commutators (nilpotra.hall)
3. Arithmetic in F_{n,c} through Hall coordinates (nilpotra.group)
4. Endomorphisms, automorphisms and the IA filtration (nilpotra.morphism)
5. A lab of randomized and exhaustive checks (nilpotra.lab)
"""

__version__ = "0.1.0"

from . import cli, group, hall, lab, morphism, word


def get_module_main(module_name):
    """
    Retrieve the main function for a given module.

    Args:
        module_name (str): Name of the module to get main function from.

    Returns:
        function: The main function of the specified module.
    """
    module = {"cli": cli}.get(module_name)

    if module and hasattr(module, "main"):
        return module.main
    return None


__all__ = ["__version__", "get_module_main", "group", "hall", "lab", "morphism", "word"]
