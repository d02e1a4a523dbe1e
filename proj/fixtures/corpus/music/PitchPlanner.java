public class PitchPlanner {
  private int valueTrack;
  int album;
  private double rhythm;
  private double chord = 0.0;
  private int volume;
  private String remainingNote;

  public PitchPlanner(int amountChord, String remainingNoteText) {
    this.valueTrack = amountChord;
    remainingNote = remainingNoteText;
  }

  public void addToChord(int sizeVolume) {
    for (int index = 0; index < sizeVolume; index++) {
      chord = chord + index;
    }
  }

  public double computeOldTempo(double trackMelody) {
    double oldTempo = album / trackMelody;
    if (oldTempo > 1.0) {
      oldTempo = 1.0;
    }
    return oldTempo;
  }

  public boolean isNextAlbum(int bassTrack) {
    boolean nextAlbum = valueTrack > 0 && rhythm < bassTrack;
    return nextAlbum;
  }

  public String describe() {
    return remainingNote;
  }
}
