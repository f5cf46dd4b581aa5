import json
from decimal import Decimal
from enum import Enum

from bilattice_programs.bilattice.base_lattice import format_element
from bilattice_programs.program.syntax import Atom
from bilattice_programs.semantics.interpretation import Interpretation


class CustomEncoder(json.JSONEncoder):
    """
    CustomEncoder: A JSON encoder for report objects.

    Atoms and truth values are written in program syntax, sets become sorted
    lists, and interpretations become lists of {atom, value} records. Empty
    collections are kept: an empty PF stage is meaningful.
    """

    @staticmethod
    def convert_basic_types(obj):
        if isinstance(obj, Decimal):
            return format_element(obj)
        if isinstance(obj, Enum):
            return str(obj)
        return obj

    def convert_list(self, obj):
        return [self.convert_to_dict(item) for item in obj]

    def convert_set(self, obj):
        return sorted((self.convert_to_dict(item) for item in obj), key=str)

    def convert_dict(self, obj):
        return {str(key) if isinstance(key, Atom) else key: self.convert_to_dict(value)
                for key, value in obj.items() if value is not None}

    def convert_annotated(self, obj):
        return {key: self.convert_to_dict(getattr(obj, key))
                for key in obj.__annotations__ if getattr(obj, key) is not None}

    def convert_to_dict(self, obj):
        """
        ConvertToDict: Converts report objects into JSON-ready structures.
        """
        if obj is None:
            return None
        if isinstance(obj, (int, str, bool, Decimal, Enum)):
            return self.convert_basic_types(obj)
        if isinstance(obj, Atom):
            return str(obj)
        if isinstance(obj, Interpretation):
            return obj.records()
        if isinstance(obj, (list, tuple)):
            return self.convert_list(obj)
        if isinstance(obj, (set, frozenset)):
            return self.convert_set(obj)
        if isinstance(obj, dict):
            return self.convert_dict(obj)
        if hasattr(obj, '__annotations__'):
            return self.convert_annotated(obj)

        return str(obj)

    def default(self, o):
        """
        Default: Encodes object to JSON, utilizing convert_to_dict for special cases.
        """
        return self.convert_to_dict(o)
