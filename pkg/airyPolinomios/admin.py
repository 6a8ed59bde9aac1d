from django.contrib import admin

from .models import CorridaVerificacion, RegistroChequeo


# =========================================================
# Custom ModelAdmin para cada modelo
# =========================================================

class RegistroChequeoInline(admin.TabularInline):
    model = RegistroChequeo
    fields = ('chequeo', 'family', 'n', 'status', 'rel_err', 'detail')
    readonly_fields = fields
    extra = 0
    can_delete = False
    show_change_link = True


@admin.register(CorridaVerificacion)
class CorridaVerificacionAdmin(admin.ModelAdmin):
    # Campos que se mostrarán en la vista de lista
    list_display = ('id_corrida', 'fecha', 'semilla', 'n_max', 'veredicto', 'total_chequeos', 'fallidos', 'duracion')
    # Filtros laterales
    list_filter = ('veredicto', 'fecha')
    # Campo por defecto para ordenar
    ordering = ('-fecha',)
    # Las corridas solo se crean desde la suite
    readonly_fields = ('fecha', 'semilla', 'n_max', 'veredicto', 'total_chequeos', 'fallidos', 'duracion')
    inlines = [RegistroChequeoInline]

    def has_add_permission(self, request):
        return False


@admin.register(RegistroChequeo)
class RegistroChequeoAdmin(admin.ModelAdmin):
    list_display = ('chequeo', 'family', 'n', 'status', 'rel_err', 'corrida')
    search_fields = ('chequeo', 'family', 'detail')
    list_filter = ('status', 'chequeo')
    ordering = ('corrida', 'id_registro')
    list_select_related = ('corrida',)

    def has_add_permission(self, request):
        return False
