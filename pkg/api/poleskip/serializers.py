from rest_framework import serializers

from .utils.relations import ComplexField


class PoleSkipPointSerializer(serializers.Serializer):
    n = serializers.IntegerField(source='level', allow_null=True)
    param = ComplexField()
    k = ComplexField()
    classification = serializers.CharField(source='classification', allow_blank=True)
    redundant = serializers.BooleanField(default=False)
    state = serializers.CharField(allow_blank=True, default='')
    order = serializers.IntegerField(allow_null=True, default=None)
    param_axis = serializers.CharField()
    wave_axis = serializers.CharField()
    series_visible = serializers.BooleanField(default=True)

    def get_fields(self):
        # 'class' can't be an attribute name
        return {('class' if name == 'classification' else name): field
                for name, field in super().get_fields().items()}


class MobiusFitSerializer(serializers.Serializer):
    a = ComplexField()
    b = ComplexField()
    c = ComplexField()
    d = ComplexField()
    ratios = serializers.SerializerMethodField()
    residual = serializers.FloatField()
    radius = serializers.FloatField()

    def get_ratios(self, fit) -> dict:
        field = ComplexField()
        return {name: field.to_representation(value) for name, value in fit.ratios().items()}


class CatalogSerializer(serializers.Serializer):
    model = serializers.CharField()
    points = PoleSkipPointSerializer(many=True)


class SlopeReportSerializer(serializers.Serializer):
    point = PoleSkipPointSerializer(allow_null=True)
    fit = MobiusFitSerializer()


class CutoffReportSerializer(serializers.Serializer):
    model = serializers.CharField()
    probe = ComplexField()
    radius = serializers.FloatField()
    ir_radius = serializers.FloatField(allow_null=True)
    uv_radius = serializers.FloatField(allow_null=True)
    winding_before = serializers.IntegerField()
    poles_after = serializers.IntegerField()
    message = serializers.CharField()


class HoloReportSerializer(serializers.Serializer):
    metric = serializers.CharField()
    omega = ComplexField()
    T = serializers.FloatField()
    nu = ComplexField()
    exponent = ComplexField()
    leading_coefficient = ComplexField()
    expected = ComplexField()


class MatsubaraSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    T = serializers.FloatField()
    omega = ComplexField()
    nu = serializers.FloatField()
