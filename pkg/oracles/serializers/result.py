from rest_framework import serializers

from core.utils.constants import LEMMA_SETS, SWEEP_FAMILIES
from oracles.models.result import CheckStatus


class CheckResultSerializer(serializers.Serializer):
    lemma = serializers.CharField()
    status = serializers.ChoiceField(choices=CheckStatus.choices)
    slack = serializers.FloatField(allow_null=True)
    k = serializers.IntegerField(allow_null=True)
    detail = serializers.DictField()


class SweepRequestSerializer(serializers.Serializer):
    """Parámetros de `verify`; listas vacías significan todo."""
    lemmas = serializers.ListField(child=serializers.ChoiceField(choices=LEMMA_SETS), default=list)
    families = serializers.ListField(child=serializers.ChoiceField(choices=list(SWEEP_FAMILIES)), default=list)
    contexts = serializers.IntegerField(min_value=1, default=200)


class SweepSummarySerializer(serializers.Serializer):
    checked = serializers.IntegerField()
    passed = serializers.IntegerField()
    vacuous = serializers.IntegerField()
    skipped = serializers.IntegerField()
    failed = serializers.IntegerField()
    worst_slack = serializers.FloatField(allow_null=True)
    by_lemma = serializers.DictField(child=serializers.DictField(child=serializers.IntegerField()))
    failures = CheckResultSerializer(many=True)
