from rest_framework import serializers

from core.utils.constants import FORM_KINDS


class PointField(serializers.ListField):
    """Vector de reales."""
    child = serializers.FloatField()


class FormDescriptorSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=FORM_KINDS)
    n = serializers.IntegerField(min_value=1, required=False)
    k = serializers.IntegerField(min_value=1, required=False)
    # custom: [[exponentes...], coeficiente]
    terms = serializers.ListField(child=serializers.ListField(), required=False)
    e = PointField(required=False)

    def validate_terms(self, value):
        for index, term in enumerate(value):
            if len(term) != 2 or not isinstance(term[0], list):
                raise serializers.ValidationError(f"Term {index} must be [[exponents...], coeff]")
            exps, coeff = term
            if any(not isinstance(a, int) or isinstance(a, bool) or a < 0 for a in exps):
                raise serializers.ValidationError(f"Term {index} has invalid exponents")
            if not isinstance(coeff, (int, float)) or isinstance(coeff, bool):
                raise serializers.ValidationError(f"Term {index} has a non-numeric coefficient")
        return value

    def validate(self, data):
        kind = data['kind']
        if kind in ('product', 'lorentz', 'symdet', 'elemsym') and 'n' not in data:
            raise serializers.ValidationError({'n': f"Required for kind '{kind}'"})
        if kind == 'elemsym':
            if 'k' not in data:
                raise serializers.ValidationError({'k': "Required for kind 'elemsym'"})
            if data['k'] > data['n']:
                raise serializers.ValidationError({'k': "Must not exceed n"})
        if kind == 'lorentz' and data['n'] < 2:
            raise serializers.ValidationError({'n': "Lorentz form needs n >= 2"})
        if kind == 'custom':
            if not data.get('terms'):
                raise serializers.ValidationError({'terms': "Required for kind 'custom'"})
            if 'e' not in data:
                raise serializers.ValidationError({'e': "Required for kind 'custom'"})
            nvars = len(data['e'])
            for index, (exps, _) in enumerate(data['terms']):
                if len(exps) != nvars:
                    raise serializers.ValidationError(
                        {'terms': f"Term {index} has {len(exps)} exponents, expected {nvars}"}
                    )
        return data
