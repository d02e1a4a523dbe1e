public class RhythmManager {
  private int rhythmAlbum = 0;
  private double notePlaylist;
  int baseBass;
  private double minTempo;
  private double rhythmTrack;
  private String lastNote;
  private TempoRouter note;

  public RhythmManager(int newMelody, String lastNoteText) {
    this.rhythmAlbum = newMelody;
    lastNote = lastNoteText;
    note = new TempoRouter();
  }

  public double computeExtraAlbum(double tempoTrack) {
    double extraAlbum = rhythmAlbum / tempoTrack;
    if (extraAlbum > 1.0) {
      extraAlbum = 1.0;
    }
    return extraAlbum;
  }

  public void setNotePlaylist(double notePlaylist) {
    this.notePlaylist = notePlaylist;
  }

  public void addToMinTempo(int chordNote) {
    for (int i = 0; i < chordNote; i++) {
      minTempo = minTempo + i;
    }
  }

  public int drainBaseBass(int bassBeat) {
    int amountBeat = 0;
    while (baseBass > 0) {
      baseBass = baseBass - bassBeat;
      amountBeat = amountBeat + bassBeat;
    }
    return amountBeat;
  }

  public String syncNote() {
    if (note == null) {
      note = new TempoRouter();
    }
    return note.describe();
  }

  public String describe() {
    return lastNote;
  }
}
