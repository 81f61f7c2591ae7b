import re

from rest_framework import serializers


COMPLEX_LITERAL = re.compile(r'^\s*[-+0-9.eEij()\s]+\s*$')


def parse_complex(text: str) -> complex:
    """Parses '0.5', '2i', '-1+0.5i' or '1-2j'."""
    assert isinstance(text, str), f"Unsupported data type (type: {type(text)})"
    if not COMPLEX_LITERAL.match(text):
        raise ValueError(f"'{text}' isn't a complex number.")
    literal = text.strip().replace(' ', '').replace('i', 'j')
    if literal in ('j', '+j', '-j'):
        literal = literal.replace('j', '1j')
    return complex(literal)


class ComplexField(serializers.Field):
    default_error_messages = {
        'invalid': 'Expected {{"re": float, "im": float}} or an "a+bi" literal (got {value}).',
    }

    def to_representation(self, value):
        value = complex(value)
        return {'re': value.real, 'im': value.imag}

    def to_internal_value(self, data):
        try:
            if isinstance(data, dict):
                return complex(float(data['re']), float(data.get('im', 0.0)))
            if isinstance(data, (int, float)):
                return complex(data)
            return parse_complex(data)
        except (KeyError, TypeError, ValueError, AssertionError):
            self.fail('invalid', value=data)
